//! Cross-check matrix behind `ggbm validate`.
//!
//! Every check compares two independent routes to the same number and
//! records the worst discrepancy against a fixed tolerance. The Monte Carlo
//! checks (level [`Level::Full`] only) record the worst `|z|`-score.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::formfactor::{
    asymptote_gbm_coefficient, debye_beta1, debye_bm, debye_expansion, debye_fbm, debye_gbm, debye_general,
    debye_limit_beta0, fit_log_asymptote, log_grid, radius_of_gyration_sq, rg_sq_from_curvature, DebyeCurve,
    GgbmParams, LimitFamily,
};
use crate::quadrature::{debye_double_integral, debye_quadrature, verify_euler_transform, QuadratureConfig};
use crate::simulate::{
    discrete_form_factor, estimate_char_fn, estimate_covariance, estimate_even_moment, estimate_odd_moment,
    mc_form_factor, sample_paths, McEstimate, SimConfig,
};
use crate::special_fn::{mittag_leffler, mittag_leffler_with, MlConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Deterministic checks only.
    Fast,
    /// Adds the Monte Carlo law suite.
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidateOptions {
    pub level: Level,
    pub seed: u64,
    pub paths: usize,
    pub steps: usize,
    /// Switch radii used by the Mittag-Leffler checks.
    pub ml: MlConfig<f64>,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        Self {
            level: Level::Fast,
            seed: 7,
            paths: 20_000,
            steps: 256,
            ml: MlConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Worst relative error, or worst `|z|` for Monte Carlo checks.
    pub metric: f64,
    pub tolerance: f64,
    pub cases: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub level: Level,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Worst case seen so far and where.
struct Worst {
    metric: f64,
    at: String,
    cases: usize,
}

impl Worst {
    fn new() -> Self {
        Self {
            metric: 0.0,
            at: String::new(),
            cases: 0,
        }
    }

    fn record(&mut self, metric: f64, at: impl FnOnce() -> String) {
        self.cases += 1;
        // NaN must win
        if !(metric <= self.metric) {
            self.metric = metric;
            self.at = at();
        }
    }
}

fn run(name: &str, tolerance: f64, body: impl FnOnce(&mut Worst) -> Result<()>) -> CheckOutcome {
    let mut w = Worst::new();
    match body(&mut w) {
        Ok(()) => CheckOutcome {
            name: name.to_string(),
            passed: w.metric <= tolerance,
            metric: w.metric,
            tolerance,
            cases: w.cases,
            detail: if w.at.is_empty() { String::new() } else { format!("worst at {}", w.at) },
        },
        Err(e) => CheckOutcome {
            name: name.to_string(),
            passed: false,
            metric: f64::NAN,
            tolerance,
            cases: w.cases,
            detail: e.to_string(),
        },
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn bm_closed(y: f64) -> f64 {
    let u = y * y;
    2.0 * (f64::exp_m1(-u) + u) / (u * u)
}

/// Run the checks selected by `opts.level`.
pub fn run_validation(opts: &ValidateOptions) -> ValidationReport {
    let mut checks = vec![
        check_ml_closed_forms(&opts.ml),
        check_gbm_identity(&opts.ml),
        check_bm_closed_forms(),
        check_fbm_formula(),
        check_quadrature_oracle(),
        check_double_integral(),
        check_euler_transform(),
        check_gbm_tail(),
        check_third_constants(),
        check_limit_constants(),
        check_grey_limit(),
        check_radius_identity(),
        check_radius_curvature(),
    ];
    if opts.level == Level::Full {
        for (beta, alpha, d) in [(0.5, 1.0, 2), (0.5, 0.5, 1)] {
            checks.extend(mc_checks(beta, alpha, d, opts));
        }
    }
    ValidationReport {
        level: opts.level,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

fn check_ml_closed_forms(ml: &MlConfig<f64>) -> CheckOutcome {
    run("ml_closed_forms", 1e-10, |w| {
        for x in log_grid(0.01, 26.0, 40)? {
            let e1 = mittag_leffler_with(1.0, 1.0, -x, ml)?.value;
            w.record(rel(e1, (-x).exp()), || format!("E_1(-{x})"));
            let e12 = mittag_leffler_with(1.0, 2.0, -x, ml)?.value;
            w.record(rel(e12, -f64::exp_m1(-x) / x), || format!("E_{{1,2}}(-{x})"));
            let half = mittag_leffler_with(0.5, 1.0, -x, ml)?.value;
            w.record(rel(half, (x * x).exp() * libm::erfc(x)), || format!("E_{{1/2}}(-{x})"));
        }
        Ok(())
    })
}

fn check_gbm_identity(ml: &MlConfig<f64>) -> CheckOutcome {
    run("gbm_identity", 1e-10, |w| {
        for beta in [0.25, 0.5, 0.75] {
            let p = GgbmParams::new(beta, beta)?;
            for y in log_grid(0.01, 20.0, 25)? {
                let reference = 2.0 * mittag_leffler_with(beta, 3.0, -y * y, ml)?.value;
                let v = debye_expansion(y, &p)?.value;
                w.record(rel(v, reference), || format!("beta={beta}, y={y}"));
            }
        }
        Ok(())
    })
}

fn check_bm_closed_forms() -> CheckOutcome {
    run("bm_closed_forms", 1e-10, |w| {
        let p = GgbmParams::new(1.0, 1.0)?;
        for y in log_grid(0.01, 30.0, 50)? {
            let exact = bm_closed(y);
            for (name, v) in [
                ("general", debye_general(y, &p)?.value),
                ("bm", debye_bm(y).value),
                ("gbm", debye_gbm(y, 1.0)?.value),
                ("fbm", debye_fbm(y, 1.0)?.value),
                ("beta1", debye_beta1(y, 1.0)?.value),
            ] {
                w.record(rel(v, exact), || format!("{name}, y={y}"));
            }
        }
        Ok(())
    })
}

fn check_fbm_formula() -> CheckOutcome {
    run("fbm_incomplete_gamma", 1e-9, |w| {
        for alpha in [0.5, 1.0, 1.5] {
            let p = GgbmParams::new(1.0, alpha)?;
            for y in log_grid(0.05, 10.0, 25)? {
                let v = debye_fbm(y, alpha)?.value;
                let reference = debye_expansion(y, &p)?.value;
                w.record(rel(v, reference), || format!("alpha={alpha}, y={y}"));
            }
        }
        Ok(())
    })
}

fn check_quadrature_oracle() -> CheckOutcome {
    run("quadrature_oracle", 1e-7, |w| {
        let cfg = QuadratureConfig::default();
        for beta in [0.5, 1.0] {
            for alpha in [0.5, 1.5] {
                let p = GgbmParams::new(beta, alpha)?;
                for y in log_grid(0.1, 50.0, 8)? {
                    let v = debye_general(y, &p)?.value;
                    let q = debye_quadrature(y, &p, &cfg)?.value;
                    w.record(rel(v, q), || format!("beta={beta}, alpha={alpha}, y={y}"));
                }
            }
        }
        Ok(())
    })
}

fn check_double_integral() -> CheckOutcome {
    run("double_integral_oracle", 1e-5, |w| {
        for (beta, alpha) in [(0.5, 1.0), (0.75, 1.5), (1.0, 0.5)] {
            let p = GgbmParams::new(beta, alpha)?;
            for y in [0.5, 1.0, 2.0] {
                let v = debye_general(y, &p)?.value;
                let d = debye_double_integral(y, &p, 96)?;
                w.record(rel(d, v), || format!("beta={beta}, alpha={alpha}, y={y}"));
            }
        }
        Ok(())
    })
}

fn check_euler_transform() -> CheckOutcome {
    run("euler_transform", 1e-8, |w| {
        let cfg = QuadratureConfig::default();
        for (beta, alpha_p, sigma, x) in [
            (0.5, 0.5, 2.0, -1.0),
            (0.5, 1.0, 2.0, -10.0),
            (0.75, 0.75, 1.5, -3.0),
            (0.25, 1.0, 1.0, -2.0),
            (0.9, 0.5, 2.0, -20.0),
        ] {
            let (lhs, rhs) = verify_euler_transform(beta, alpha_p, sigma, x, &cfg)?;
            w.record(rel(lhs, rhs), || format!("beta={beta}, rho={alpha_p}, sigma={sigma}, x={x}"));
        }
        Ok(())
    })
}

fn check_gbm_tail() -> CheckOutcome {
    run("gbm_tail_coefficient", 0.02, |w| {
        for beta in [0.3, 0.5, 0.8] {
            let y = 100.0;
            let v = y * y * debye_gbm(y, beta)?.value;
            w.record(rel(v, asymptote_gbm_coefficient(beta)?), || format!("beta={beta}"));
        }
        Ok(())
    })
}

/// Published fit of `y² f_D(y; 1/3, 1)` over `y ∈ [30, 300]`.
pub const THIRD_CONSTANTS: (f64, f64) = (-0.827976, 2.95395);

fn check_third_constants() -> CheckOutcome {
    run("beta_third_constants", 0.02, |w| {
        let p = GgbmParams::new(1.0 / 3.0, 1.0)?;
        let curve = DebyeCurve::evaluate(p, &log_grid(30.0, 300.0, 40)?)?;
        let (k1, k2) = fit_log_asymptote(&curve, 30.0)?;
        w.record(rel(k1, THIRD_CONSTANTS.0), || format!("k1={k1}"));
        w.record(rel(k2, THIRD_CONSTANTS.1), || format!("k2={k2}"));
        Ok(())
    })
}

fn check_limit_constants() -> CheckOutcome {
    run("beta_zero_limit_constants", 0.02, |w| {
        let curve = DebyeCurve::limit(LimitFamily::AlphaOne, &log_grid(30.0, 300.0, 40)?)?;
        let (k1, k2) = fit_log_asymptote(&curve, 30.0)?;
        w.record(rel(k1, -2.0), || format!("k1={k1}"));
        w.record(rel(k2, 4.0), || format!("k2={k2}"));
        Ok(())
    })
}

fn check_grey_limit() -> CheckOutcome {
    run("beta_zero_grey_limit", 0.01, |w| {
        let p = GgbmParams::new(0.01, 0.01)?;
        for y in log_grid(0.05, 0.9, 20)? {
            let v = debye_general(y, &p)?.value;
            w.record(rel(v, debye_limit_beta0(y, LimitFamily::GreyBm)?), || format!("y={y}"));
        }
        Ok(())
    })
}

const RADIUS_GRID: [(f64, f64, f64); 6] = [
    (0.1, 0.3, 1.0),
    (0.4, 1.0, 11.0),
    (0.7, 1.7, 3.5),
    (1.0, 1.0, 1.0),
    (1.0, 0.3, 250.0),
    (0.25, 1.9, 40.0),
];

fn check_radius_identity() -> CheckOutcome {
    run("radius_identity", 1e-12, |w| {
        for (beta, alpha, n) in RADIUS_GRID {
            let r = radius_of_gyration_sq(&GgbmParams::new(beta, alpha)?, n)?;
            w.record(r.relation_error(), || format!("beta={beta}, alpha={alpha}, n={n}"));
        }
        Ok(())
    })
}

fn check_radius_curvature() -> CheckOutcome {
    run("radius_curvature", 1e-4, |w| {
        for (beta, alpha, n) in RADIUS_GRID {
            let p = GgbmParams::new(beta, alpha)?;
            let rg = rg_sq_from_curvature(&p, n, 1e-3)?;
            w.record(rel(rg, radius_of_gyration_sq(&p, n)?.r_g_sq), || {
                format!("beta={beta}, alpha={alpha}, n={n}")
            });
        }
        Ok(())
    })
}

fn mc_checks(beta: f64, alpha: f64, d: usize, opts: &ValidateOptions) -> Vec<CheckOutcome> {
    let tag = format!("[beta={beta},alpha={alpha},d={d}]");
    let name = |s: &str| format!("{s}{tag}");
    let ens = GgbmParams::new(beta, alpha)
        .and_then(|p| SimConfig::new(p, d, opts.steps, 1.0, opts.paths, opts.seed))
        .and_then(|c| sample_paths(&c));
    let ens = match ens {
        Ok(e) => e,
        Err(e) => {
            return vec![CheckOutcome {
                name: name("mc_sampling"),
                passed: false,
                metric: f64::NAN,
                tolerance: 0.0,
                cases: 0,
                detail: e.to_string(),
            }]
        }
    };
    let cfg = *ens.config();
    let idx: Vec<usize> = [0.25, 0.5, 0.75, 1.0].iter().map(|&t| cfg.index_of(t)).collect();
    let g1 = libm::tgamma(beta + 1.0);
    let z = |e: &McEstimate, target: f64| e.z_score(target).abs();

    vec![
        run(&name("mc_covariance"), 3.0, |w| {
            for &i in &idx {
                for &j in &idx {
                    let (t, s) = (cfg.time(i), cfg.time(j));
                    let target = (t.powf(alpha) + s.powf(alpha) - (t - s).abs().powf(alpha)) / (2.0 * g1);
                    w.record(z(&estimate_covariance(&ens, i, j)?, target), || format!("t={t}, s={s}"));
                }
            }
            Ok(())
        }),
        run(&name("mc_even_moments"), 3.0, |w| {
            for &i in &idx {
                let t = cfg.time(i);
                for (order, fact) in [(2u32, 2.0), (4, 24.0)] {
                    let n = f64::from(order / 2);
                    let target = fact / (2f64.powf(n) * libm::tgamma(beta * n + 1.0)) * t.powf(alpha * n);
                    w.record(z(&estimate_even_moment(&ens, i, order)?, target), || format!("order={order}, t={t}"));
                }
            }
            Ok(())
        }),
        run(&name("mc_odd_moments"), 3.0, |w| {
            for &i in &idx {
                for order in [1u32, 3] {
                    w.record(z(&estimate_odd_moment(&ens, i, order)?, 0.0), || {
                        format!("order={order}, t={}", cfg.time(i))
                    });
                }
            }
            Ok(())
        }),
        run(&name("mc_char_fn"), 3.0, |w| {
            let i = cfg.n_steps;
            for km in [0.5, 1.0, 2.0] {
                let mut k = vec![0.0; d];
                k[0] = km;
                let target = mittag_leffler(beta, 1.0, -0.5 * km * km)?.value;
                w.record(z(&estimate_char_fn(&ens, i, &k)?, target), || format!("|k|={km}"));
            }
            Ok(())
        }),
        run(&name("mc_form_factor"), 3.0, |w| {
            let p = cfg.params;
            for y in [0.5, 1.0, 2.0] {
                let km = (2.0f64 * y * y).sqrt();
                let mut k = vec![0.0; d];
                k[d - 1] = km;
                let target = debye_general(y, &p)?.value;
                let est = mc_form_factor(&ens, &k)?;
                w.record(z(&est.estimate, target), || format!("y={y}"));
                // the trapezoid bias must be small against the noise
                let discrete = discrete_form_factor(&p, km * km, 1.0, cfg.n_steps)?;
                w.record((discrete - target).abs() / est.estimate.std_error, || format!("bias y={y}"));
            }
            Ok(())
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_level_passes() {
        let r = run_validation(&ValidateOptions::default());
        for c in &r.checks {
            assert!(c.passed, "{c:?}");
            assert!(c.cases > 0, "{}", c.name);
        }
        assert!(r.passed);
        assert!(!r.checks.iter().any(|c| c.name.starts_with("mc_")));
    }

    #[test]
    fn corrupted_switch_radius_is_reported() {
        let opts = ValidateOptions {
            ml: MlConfig {
                taylor_radius: 40.0,
                asymptotic_radius: 60.0,
                fallback: false,
            },
            ..Default::default()
        };
        let r = run_validation(&opts);
        assert!(!r.passed);
        let names: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"ml_closed_forms"), "{names:?}");
    }

    #[test]
    fn full_level_runs_mc_suite() {
        let opts = ValidateOptions {
            level: Level::Full,
            paths: 2000,
            steps: 64,
            ..Default::default()
        };
        let r = run_validation(&opts);
        let mc: Vec<_> = r.checks.iter().filter(|c| c.name.starts_with("mc_")).collect();
        assert_eq!(mc.len(), 10);
        assert!(mc.iter().all(|c| c.metric.is_finite()));
    }

    #[test]
    fn report_serialises_with_stable_keys() {
        let r = ValidationReport {
            level: Level::Fast,
            passed: true,
            checks: vec![run("x", 1.0, |w| {
                w.record(0.5, || "here".into());
                Ok(())
            })],
        };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["level"], "fast");
        assert_eq!(v["checks"][0]["name"], "x");
        assert_eq!(v["checks"][0]["metric"], 0.5);
        assert_eq!(v["checks"][0]["detail"], "worst at here");
    }
}
