use std::fs::{self, File};
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ggbm::formfactor::{
    debye_beta1, debye_bm, debye_fbm, debye_gbm, debye_general, debye_limit_beta0, fit_log_asymptote, form_factor,
    linear_grid, log_grid, DebyeCurve, GgbmParams, LimitFamily,
};
use ggbm::quadrature::{debye_quadrature, QuadratureConfig};
use ggbm::simulate::{
    discrete_form_factor, estimate_covariance, estimate_even_moment, estimate_odd_moment, load_ensemble,
    mc_form_factor, sample_paths, save_ensemble, McEstimate, SimConfig,
};
use ggbm::special_fn::{mittag_leffler, rgamma, MlConfig};
use ggbm::validate::{run_validation, Level, ValidateOptions};
use ggbm::{Error, EvalResult, Method};
use serde_json::{json, Value};

use crate::{CurveArgs, FamilyArg, LimitArg, Scale, SimulateArgs};

/// Error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn report(self) -> ExitCode {
        eprintln!("ggbm: {}", self.message);
        ExitCode::from(self.code)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Format(_) | Error::Json(_) => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<ExitCode, Failure>;

/// Worker pool sized by `GGBM_THREADS` (rayon's default when unset).
pub fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let n = match std::env::var("GGBM_THREADS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => return Err(Failure::usage(format!("GGBM_THREADS must be a positive integer, got '{s}'"))),
        },
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| Failure::usage(e.to_string()))
}

fn print_json(v: &Value) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    fs::write(path, s).map_err(|e| io_context(path, e))
}

fn io_context(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: 3,
        message: format!("{}: {e}", path.display()),
    }
}

fn with_path(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn eval_json(r: &EvalResult<f64>) -> Value {
    json!({ "value": r.value, "abs_error_est": r.abs_error_est, "method": r.method.as_str() })
}

fn estimate_json(e: &McEstimate, expected: f64) -> Value {
    json!({
        "value": e.value,
        "std_error": e.std_error,
        "n_samples": e.n_samples,
        "expected": expected,
        "z_score": e.z_score(expected),
    })
}

pub fn ml(beta: f64, rho: f64, z: f64) -> CmdResult {
    let r = mittag_leffler(beta, rho, z)?;
    let mut v = eval_json(&r);
    v["beta"] = json!(beta);
    v["rho"] = json!(rho);
    v["z"] = json!(z);
    print_json(&v)?;
    Ok(ExitCode::SUCCESS)
}

fn grid(req: &CurveArgs) -> Result<Vec<f64>, Failure> {
    if !(req.y_min < req.y_max) {
        return Err(Failure::usage(format!("y_min must be below y_max, got {} and {}", req.y_min, req.y_max)));
    }
    if req.points < 2 {
        return Err(Failure::usage("a curve needs at least 2 points"));
    }
    Ok(match req.scale {
        Scale::Linear => linear_grid(req.y_min, req.y_max, req.points)?,
        Scale::LogLog => log_grid(req.y_min, req.y_max, req.points)?,
    })
}

fn curve_rows(req: &CurveArgs) -> Result<Vec<(f64, EvalResult<f64>)>, Failure> {
    let ys = grid(req)?;
    let limit = |y: f64, fam| -> ggbm::Result<EvalResult<f64>> {
        let v = debye_limit_beta0(y, fam)?;
        Ok(EvalResult::new(v, 8.0 * f64::EPSILON * v.abs(), Method::ClosedForm))
    };
    let quad = QuadratureConfig::default();
    let rows = ys
        .iter()
        .map(|&y| {
            let r = match req.family {
                FamilyArg::General => debye_general(y, &GgbmParams::new(req.beta, req.alpha)?),
                FamilyArg::Gbm => debye_gbm(y, req.beta),
                FamilyArg::Fbm => debye_fbm(y, req.alpha),
                FamilyArg::Beta1 => debye_beta1(y, req.beta),
                FamilyArg::Bm => Ok(debye_bm(y)),
                FamilyArg::Quadrature => debye_quadrature(y, &GgbmParams::new(req.beta, req.alpha)?, &quad),
                FamilyArg::LimitGrey => limit(y, LimitFamily::GreyBm),
                FamilyArg::LimitAlphaOne => limit(y, LimitFamily::AlphaOne),
            }?;
            Ok((y, r))
        })
        .collect::<ggbm::Result<Vec<_>>>()?;
    Ok(rows)
}

fn write_csv<W: Write>(w: W, rows: &[(f64, EvalResult<f64>)]) -> Result<(), Failure> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["y", "f_D", "method", "abs_err"])?;
    for (y, r) in rows {
        out.write_record([y.to_string(), r.value.to_string(), r.method.as_str().to_string(), r.abs_error_est.to_string()])?;
    }
    out.flush()?;
    Ok(())
}

pub fn curve(req: &CurveArgs, out: Option<&Path>) -> CmdResult {
    let rows = curve_rows(req)?;
    match out {
        Some(path) => {
            let f = File::create(path).map_err(|e| io_context(path, e))?;
            write_csv(io::BufWriter::new(f), &rows)?;
        }
        None => write_csv(io::stdout().lock(), &rows)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// `(figure, family, β, α)` of the preset curves.
const FIGURES: &[(u8, FamilyArg, f64, f64)] = &[
    (1, FamilyArg::General, 1.0, 1.0),
    (1, FamilyArg::General, 0.5, 0.5),
    (1, FamilyArg::General, 0.5, 1.5),
    (1, FamilyArg::General, 0.8, 1.2),
    (1, FamilyArg::General, 0.3, 0.7),
    (2, FamilyArg::Gbm, 1.0, 1.0),
    (2, FamilyArg::Gbm, 0.8, 0.8),
    (2, FamilyArg::Gbm, 0.5, 0.5),
    (2, FamilyArg::Gbm, 0.3, 0.3),
    (3, FamilyArg::Beta1, 1.0, 1.0),
    (3, FamilyArg::Beta1, 0.5, 1.0),
    (3, FamilyArg::Beta1, 1.0 / 3.0, 1.0),
    (3, FamilyArg::LimitAlphaOne, 0.0, 1.0),
];

pub fn figures(out_dir: &Path, points: usize) -> CmdResult {
    fs::create_dir_all(out_dir).map_err(|e| io_context(out_dir, e))?;
    let mut files = Vec::new();
    for &(fig, family, beta, alpha) in FIGURES {
        for (scale, tag) in [(Scale::Linear, "linear"), (Scale::LogLog, "loglog")] {
            let req = CurveArgs {
                family,
                beta,
                alpha,
                y_min: 0.05,
                y_max: 100.0,
                points,
                scale,
            };
            let name = match family {
                FamilyArg::LimitAlphaOne => format!("figure{fig}_limit_alpha1_{tag}.csv"),
                _ => format!("figure{fig}_beta{beta:.4}_alpha{alpha:.4}_{tag}.csv"),
            };
            let path = out_dir.join(&name);
            curve(&req, Some(&path))?;
            files.push(json!({
                "file": name,
                "figure": fig,
                "family": format!("{family:?}").to_lowercase(),
                "beta": if family == FamilyArg::LimitAlphaOne { Value::Null } else { json!(beta) },
                "alpha": alpha,
                "scale": tag,
                "y_min": 0.05,
                "y_max": 100.0,
                "points": points,
            }));
        }
    }
    write_json(&out_dir.join("manifest.json"), &json!({ "curves": files }))?;
    Ok(ExitCode::SUCCESS)
}

pub fn validate(full: bool, seed: u64, paths: usize, steps: usize, fault: bool) -> CmdResult {
    let mut opts = ValidateOptions {
        level: if full { Level::Full } else { Level::Fast },
        seed,
        paths,
        steps,
        ..ValidateOptions::default()
    };
    if fault {
        opts.ml = MlConfig {
            taylor_radius: 40.0,
            asymptotic_radius: 60.0,
            fallback: false,
        };
    }
    let report = run_validation(&opts);
    print_json(&serde_json::to_value(&report)?)?;
    if report.passed {
        return Ok(ExitCode::SUCCESS);
    }
    for c in report.failures() {
        eprintln!("ggbm: check failed: {} (metric {:e}, tolerance {:e}) {}", c.name, c.metric, c.tolerance, c.detail);
    }
    Ok(ExitCode::from(1))
}

pub fn simulate(args: &SimulateArgs) -> CmdResult {
    let params = GgbmParams::new(args.beta, args.alpha)?;
    let cfg = SimConfig::new(params, args.dim, args.steps, args.horizon, args.paths, args.seed)?;
    let ens = sample_paths(&cfg)?;
    save_ensemble(&ens, &args.out).map_err(|e| with_path(&args.out, e))?;

    let (beta, alpha) = (args.beta, args.alpha);
    let g1 = rgamma(beta + 1.0);
    let idx: Vec<usize> = [0.25, 0.5, 0.75, 1.0].iter().map(|f| cfg.index_of(f * cfg.horizon)).collect();
    let last = cfg.n_steps;
    let var = estimate_even_moment(&ens, last, 2)?;
    let mut covariance = Vec::new();
    for &i in &idx {
        for &j in &idx {
            let (t, s) = (cfg.time(i), cfg.time(j));
            let expected = (t.powf(alpha) + s.powf(alpha) - (t - s).abs().powf(alpha)) * 0.5 * g1;
            let mut v = estimate_json(&estimate_covariance(&ens, i, j)?, expected);
            v["t"] = json!(t);
            v["s"] = json!(s);
            covariance.push(v);
        }
    }
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for &i in &idx {
        let t = cfg.time(i);
        for (order, fact) in [(2u32, 2.0), (4, 24.0)] {
            let n = f64::from(order / 2);
            let expected = fact / 2f64.powf(n) * rgamma(beta * n + 1.0) * t.powf(alpha * n);
            let mut v = estimate_json(&estimate_even_moment(&ens, i, order)?, expected);
            v["order"] = json!(order);
            v["t"] = json!(t);
            even.push(v);
        }
        for order in [1u32, 3] {
            let mut v = estimate_json(&estimate_odd_moment(&ens, i, order)?, 0.0);
            v["order"] = json!(order);
            v["t"] = json!(t);
            odd.push(v);
        }
    }
    let summary = json!({
        "config": cfg,
        "generator": ggbm::simulate::FgnGenerator::new(cfg.params.hurst(), cfg.n_steps, cfg.dt())?.method(),
        "variance": estimate_json(&var, cfg.horizon.powf(alpha) * g1),
        "covariance": covariance,
        "even_moments": even,
        "odd_moments": odd,
    });
    let summary_path = args.summary.clone().unwrap_or_else(|| default_summary_path(&args.out));
    write_json(&summary_path, &summary)?;
    print_json(&summary)?;
    Ok(ExitCode::SUCCESS)
}

fn default_summary_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

fn agree(name: &str, given: Option<f64>, from_file: f64) -> Result<f64, Failure> {
    match given {
        Some(v) if v != from_file => Err(Failure::usage(format!("--{name} {v} disagrees with the ensemble ({from_file})"))),
        _ => Ok(from_file),
    }
}

pub fn formfactor(k: &[f64], n: Option<f64>, beta: Option<f64>, alpha: Option<f64>, mc: Option<&Path>) -> CmdResult {
    let ens = mc.map(|p| load_ensemble(p).map_err(|e| with_path(p, e))).transpose()?;
    let (n, beta, alpha) = match &ens {
        Some(e) => {
            let c = e.config();
            if k.len() != c.d {
                return Err(Error::DimensionMismatch { expected: c.d, got: k.len() }.into());
            }
            (agree("n", n, c.horizon)?, agree("beta", beta, c.params.beta())?, agree("alpha", alpha, c.params.alpha())?)
        }
        None => match (n, beta, alpha) {
            (Some(n), Some(b), Some(a)) => (n, b, a),
            _ => return Err(Failure::usage("--n, --beta and --alpha are required without --mc")),
        },
    };
    let params = GgbmParams::new(beta, alpha)?;
    let s = form_factor(k, k.len(), n, &params)?;
    let k2: f64 = k.iter().map(|v| v * v).sum();
    let mut out = eval_json(&s);
    out["k"] = json!(k);
    out["n"] = json!(n);
    out["beta"] = json!(beta);
    out["alpha"] = json!(alpha);
    out["y"] = json!((n.powf(alpha) * k2 * 0.5).sqrt());
    if let Some(e) = &ens {
        let m = mc_form_factor(e, k)?;
        let c = e.config();
        out["mc"] = json!({
            "file": mc.map(|p| p.display().to_string()),
            "n_paths": c.n_paths,
            "n_steps": c.n_steps,
            "estimate": m.estimate.value,
            "std_error": m.estimate.std_error,
            "z_score": m.estimate.z_score(s.value),
            "imag": m.imag.value,
            "imag_std_error": m.imag.std_error,
            "discrete_expectation": discrete_form_factor(&params, k2, c.horizon, c.n_steps)?,
        });
    }
    print_json(&out)?;
    Ok(ExitCode::SUCCESS)
}

pub fn fit(beta: Option<f64>, alpha: f64, limit: Option<LimitArg>, y_min: f64, y_max: f64, points: usize) -> CmdResult {
    if !(y_min < y_max) {
        return Err(Failure::usage(format!("y_min must be below y_max, got {y_min} and {y_max}")));
    }
    let ys = log_grid(y_min, y_max, points)?;
    let (curve, label) = match (limit, beta) {
        (Some(LimitArg::Grey), _) => (DebyeCurve::limit(LimitFamily::GreyBm, &ys)?, json!({ "limit": "grey" })),
        (Some(LimitArg::AlphaOne), _) => (DebyeCurve::limit(LimitFamily::AlphaOne, &ys)?, json!({ "limit": "alpha_one" })),
        (None, Some(b)) => (
            DebyeCurve::evaluate(GgbmParams::new(b, alpha)?, &ys)?,
            json!({ "beta": b, "alpha": alpha }),
        ),
        (None, None) => return Err(Failure::usage("either --beta or --limit is required")),
    };
    let (k1, k2) = fit_log_asymptote(&curve, y_min)?;
    let mut out = label;
    out["y_min"] = json!(y_min);
    out["y_max"] = json!(y_max);
    out["points"] = json!(points);
    out["k1"] = json!(k1);
    out["k2"] = json!(k2);
    print_json(&out)?;
    Ok(ExitCode::SUCCESS)
}
