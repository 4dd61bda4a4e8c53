//! Monte Carlo estimators over a [`PathEnsemble`].
//!
//! Components of one path share the subordinator and are therefore not
//! independent; each estimator averages over components within a path first
//! and takes its standard error across paths.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formfactor::GgbmParams;
use crate::simulate::PathEnsemble;
use crate::special_fn::mittag_leffler;
use crate::sum::Compensated;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub value: f64,
    /// Sample standard deviation over `√n_samples`.
    pub std_error: f64,
    pub n_samples: usize,
}

impl McEstimate {
    /// Mean and standard error of independent samples (two-pass, compensated).
    pub fn from_samples(samples: &[f64]) -> Self {
        let n = samples.len();
        if n == 0 {
            return Self {
                value: f64::NAN,
                std_error: f64::INFINITY,
                n_samples: 0,
            };
        }
        let mean = samples.iter().copied().collect::<Compensated<f64>>().value() / n as f64;
        let std_error = if n > 1 {
            let ss = samples.iter().map(|x| (x - mean) * (x - mean)).collect::<Compensated<f64>>().value();
            (ss / (n - 1) as f64).sqrt() / (n as f64).sqrt()
        } else {
            f64::INFINITY
        };
        Self {
            value: mean,
            std_error,
            n_samples: n,
        }
    }

    /// `(value - target) / std_error`.
    pub fn z_score(&self, target: f64) -> f64 {
        (self.value - target) / self.std_error
    }

    /// `|value - target| ≤ k · std_error`.
    pub fn within(&self, target: f64, k: f64) -> bool {
        (self.value - target).abs() <= k * self.std_error
    }
}

fn check_index(ens: &PathEnsemble, idx: usize) -> Result<()> {
    let n = ens.config().n_steps;
    if idx > n {
        return Err(Error::domain(format!("time index {idx} outside grid 0..={n}")));
    }
    Ok(())
}

/// Per-path statistic averaged over components.
fn per_path(ens: &PathEnsemble, f: impl Fn(&[f64]) -> f64) -> McEstimate {
    let cfg = ens.config();
    let d = cfg.d;
    let samples: Vec<f64> = (0..cfg.n_paths)
        .map(|p| (0..d).map(|j| f(ens.component(p, j))).sum::<f64>() / d as f64)
        .collect();
    McEstimate::from_samples(&samples)
}

/// `E[B_j(t) B_j(s)]`; target `(t^α + s^α - |t-s|^α) / (2Γ(β+1))`.
pub fn estimate_covariance(ens: &PathEnsemble, t_idx: usize, s_idx: usize) -> Result<McEstimate> {
    check_index(ens, t_idx)?;
    check_index(ens, s_idx)?;
    Ok(per_path(ens, |x| x[t_idx] * x[s_idx]))
}

/// `E[B_j(t)^{2n}]`; target `(2n)! t^{αn} / (2ⁿ Γ(βn+1))`.
pub fn estimate_even_moment(ens: &PathEnsemble, t_idx: usize, order: u32) -> Result<McEstimate> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::domain(format!("even moment order must be a positive even integer, got {order}")));
    }
    check_index(ens, t_idx)?;
    Ok(per_path(ens, |x| x[t_idx].powi(order as i32)))
}

/// `E[B_j(t)^{2n+1}]`; target 0.
pub fn estimate_odd_moment(ens: &PathEnsemble, t_idx: usize, order: u32) -> Result<McEstimate> {
    if order % 2 != 1 {
        return Err(Error::domain(format!("odd moment order must be odd, got {order}")));
    }
    check_index(ens, t_idx)?;
    Ok(per_path(ens, |x| x[t_idx].powi(order as i32)))
}

/// `E[(B_j(t+h) - B_j(h))^order]` with `t`, `h` given as grid indices.
pub fn estimate_increment_moment(ens: &PathEnsemble, t_idx: usize, h_idx: usize, order: u32) -> Result<McEstimate> {
    if order == 0 {
        return Err(Error::domain("moment order must be >= 1"));
    }
    check_index(ens, t_idx + h_idx)?;
    Ok(per_path(ens, |x| (x[t_idx + h_idx] - x[h_idx]).powi(order as i32)))
}

fn check_k(ens: &PathEnsemble, k: &[f64]) -> Result<()> {
    let d = ens.config().d;
    if k.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: k.len() });
    }
    Ok(())
}

/// `E[cos(k·B(t))]`, the real part of the characteristic function;
/// target `E_β(-|k|² t^α / 2)`.
pub fn estimate_char_fn(ens: &PathEnsemble, t_idx: usize, k: &[f64]) -> Result<McEstimate> {
    check_k(ens, k)?;
    check_index(ens, t_idx)?;
    let cfg = ens.config();
    let samples: Vec<f64> = (0..cfg.n_paths)
        .map(|p| {
            let phase: f64 = k.iter().enumerate().map(|(j, kj)| kj * ens.component(p, j)[t_idx]).sum();
            phase.cos()
        })
        .collect();
    Ok(McEstimate::from_samples(&samples))
}

/// Trapezoid weights on `n_steps + 1` equispaced points, summing to 1.
pub fn trapezoid_weights(n_steps: usize) -> Vec<f64> {
    let h = 1.0 / n_steps as f64;
    let mut w = vec![h; n_steps + 1];
    w[0] = 0.5 * h;
    w[n_steps] = 0.5 * h;
    w
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McFormFactor {
    /// Estimate of `S(k)`.
    pub estimate: McEstimate,
    /// `Im Σ_i w_i e^{ik·B(t_i)}` averaged over paths; zero in law.
    pub imag: McEstimate,
    /// `y = √(n^α |k|² / 2)`.
    pub y: f64,
}

/// Trapezoidal double time average of `e^{ik·(B(t)-B(s))}` per path.
///
/// `Σ_ij w_i w_j e^{ik·(B_i - B_j)} = |Σ_i w_i e^{ik·B_i}|²`, so each path
/// costs `O(n_steps · d)`.
pub fn mc_form_factor(ens: &PathEnsemble, k: &[f64]) -> Result<McFormFactor> {
    check_k(ens, k)?;
    let cfg = ens.config();
    let n1 = cfg.n_steps + 1;
    let w = trapezoid_weights(cfg.n_steps);
    let mut real = Vec::with_capacity(cfg.n_paths);
    let mut imag = Vec::with_capacity(cfg.n_paths);
    let mut phase = vec![0.0; n1];
    for p in 0..cfg.n_paths {
        phase.iter_mut().for_each(|v| *v = 0.0);
        for (j, &kj) in k.iter().enumerate() {
            for (ph, x) in phase.iter_mut().zip(ens.component(p, j)) {
                *ph += kj * x;
            }
        }
        let mut re = Compensated::new();
        let mut im = Compensated::new();
        for (wi, ph) in w.iter().zip(&phase) {
            let (s, c) = ph.sin_cos();
            re.add(wi * c);
            im.add(wi * s);
        }
        let (re, im) = (re.value(), im.value());
        real.push(re * re + im * im);
        imag.push(im);
    }
    let k2: f64 = k.iter().map(|v| v * v).sum();
    Ok(McFormFactor {
        estimate: McEstimate::from_samples(&real),
        imag: McEstimate::from_samples(&imag),
        y: (cfg.horizon.powf(cfg.params.alpha()) * k2 * 0.5).sqrt(),
    })
}

/// Exact expectation of the trapezoidal estimator of [`mc_form_factor`]:
/// `Σ_ij w_i w_j E_β(-|k|² |t_i - t_j|^α / 2)`.
pub fn discrete_form_factor(params: &GgbmParams<f64>, k2: f64, horizon: f64, n_steps: usize) -> Result<f64> {
    if n_steps < 1 {
        return Err(Error::domain("n_steps must be >= 1"));
    }
    let w = trapezoid_weights(n_steps);
    let dt = horizon / n_steps as f64;
    let mut acc = Compensated::new();
    for lag in 0..=n_steps {
        let pair: f64 = (0..=n_steps - lag).map(|i| w[i] * w[i + lag]).sum();
        let mult = if lag == 0 { 1.0 } else { 2.0 };
        let e = mittag_leffler(params.beta(), 1.0, -0.5 * k2 * (lag as f64 * dt).powf(params.alpha()))?.value;
        acc.add(mult * pair * e);
    }
    Ok(acc.value())
}
