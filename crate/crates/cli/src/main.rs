//! `ggbm`: Debye functions, validation and path simulation for generalized
//! grey Brownian motion.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or domain error,
//! 3 I/O error.

// `!(x > 0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "ggbm", version, about = "Form factors of generalized grey Brownian motion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the Mittag-Leffler function E_{β,ρ}(z); prints JSON.
    Ml {
        #[arg(long, value_parser = parse_real)]
        beta: f64,
        #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        z: f64,
    },
    /// Write one Debye curve as CSV (`y,f_D,method,abs_err`).
    Curve {
        #[command(flatten)]
        req: CurveArgs,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the curve families of the three reference figures.
    Figures {
        #[arg(long, default_value = "figures")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 400)]
        points: usize,
    },
    /// Run the cross-check matrix; prints a JSON report.
    Validate {
        #[arg(value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 20_000)]
        paths: usize,
        #[arg(long, default_value_t = 256)]
        steps: usize,
        #[arg(long, value_enum)]
        inject_fault: Option<Fault>,
    },
    /// Sample a path ensemble, write it with its sidecar and a summary.
    Simulate(SimulateArgs),
    /// Analytic form factor S(k), optionally against an ensemble.
    Formfactor {
        /// Wave vector, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true, value_parser = parse_real)]
        k: Vec<f64>,
        /// Path length; defaults to the ensemble horizon with `--mc`.
        #[arg(long, value_parser = parse_real)]
        n: Option<f64>,
        #[arg(long, value_parser = parse_real)]
        beta: Option<f64>,
        #[arg(long, value_parser = parse_real)]
        alpha: Option<f64>,
        /// Ensemble file written by `simulate`.
        #[arg(long)]
        mc: Option<PathBuf>,
    },
    /// Fit y² f_D(y) ≈ k1 + k2 ln y over the tail of a log grid.
    Fit {
        #[arg(long, value_parser = parse_real, required_unless_present = "limit")]
        beta: Option<f64>,
        #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
        alpha: f64,
        /// Fit a β → 0 limit curve instead.
        #[arg(long, value_enum, conflicts_with = "beta")]
        limit: Option<LimitArg>,
        #[arg(long, default_value_t = 30.0)]
        y_min: f64,
        #[arg(long, default_value_t = 300.0)]
        y_max: f64,
        #[arg(long, default_value_t = 40)]
        points: usize,
    },
}

#[derive(Args, Clone, Debug)]
pub struct CurveArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::General)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0, value_parser = parse_real)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.05)]
    pub y_min: f64,
    #[arg(long, default_value_t = 100.0)]
    pub y_max: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Scale::LogLog)]
    pub scale: Scale,
}

#[derive(Args, Clone, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_parser = parse_real)]
    pub beta: f64,
    #[arg(long, value_parser = parse_real)]
    pub alpha: f64,
    /// Spatial dimension.
    #[arg(long, default_value_t = 1)]
    pub dim: usize,
    #[arg(long, default_value_t = 256)]
    pub steps: usize,
    #[arg(long, default_value_t = 1.0)]
    pub horizon: f64,
    #[arg(long, default_value_t = 1000)]
    pub paths: usize,
    #[arg(long)]
    pub seed: u64,
    /// Ensemble file; the sidecar goes next to it as `<out>.json`.
    #[arg(long)]
    pub out: PathBuf,
    /// Summary file; defaults to `<out>.summary.json`.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    /// Dispatching evaluator.
    General,
    /// α = β.
    Gbm,
    /// β = 1, incomplete-gamma form.
    Fbm,
    /// α = 1.
    Beta1,
    /// β = α = 1 closed form.
    Bm,
    /// Adaptive quadrature oracle.
    Quadrature,
    /// β → 0 with α = β: 1/(1+y²).
    LimitGrey,
    /// β → 0 with α = 1.
    LimitAlphaOne,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Linear,
    LogLog,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Fault {
    /// Move the Mittag-Leffler switch radii to 40/60 without fallback.
    MlRadius,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum LimitArg {
    Grey,
    AlphaOne,
}

/// A real number, also accepted as a fraction `p/q`.
fn parse_real(s: &str) -> Result<f64, String> {
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("invalid number '{t}': {e}"));
    match s.split_once('/') {
        Some((p, q)) => Ok(parse(p)? / parse(q)?),
        None => parse(s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match commands::thread_pool() {
        Ok(p) => p,
        Err(f) => return f.report(),
    };
    let result = pool.install(|| match cli.command {
        Command::Ml { beta, rho, z } => commands::ml(beta, rho, z),
        Command::Curve { req, out } => commands::curve(&req, out.as_deref()),
        Command::Figures { out_dir, points } => commands::figures(&out_dir, points),
        Command::Validate {
            level,
            seed,
            paths,
            steps,
            inject_fault,
        } => commands::validate(level == LevelArg::Full, seed, paths, steps, inject_fault == Some(Fault::MlRadius)),
        Command::Simulate(args) => commands::simulate(&args),
        Command::Formfactor { k, n, beta, alpha, mc } => commands::formfactor(&k, n, beta, alpha, mc.as_deref()),
        Command::Fit {
            beta,
            alpha,
            limit,
            y_min,
            y_max,
            points,
        } => commands::fit(beta, alpha, limit, y_min, y_max, points),
    });
    match result {
        Ok(code) => code,
        Err(f) => f.report(),
    }
}
