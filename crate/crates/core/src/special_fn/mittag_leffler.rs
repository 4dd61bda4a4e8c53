//! Generalized Mittag-Leffler function `E_{β,ρ}(z) = Σ zⁿ / Γ(βn + ρ)` for
//! `0 < β < 2` and real `z ≤ 0`.
//!
//! Three methods are available and each reports its own error estimate:
//!
//! * Taylor series, compensated, terms built in log space;
//! * the algebraic asymptotic expansion `-Σ_{n=1}^{m} z^{-n}/Γ(ρ-βn)`,
//!   optimally truncated (for `1 < β < 2` the two decaying exponential
//!   branches are added);
//! * for `0 < β < 1`, a kernel integral over `(0, ∞)` that is valid on the
//!   whole negative axis, used in the band where neither series is accurate.
//!
//! The switch radii in [`MlConfig`] pick the first method to try; the first
//! candidate whose estimate meets the working tolerance wins, otherwise the
//! best candidate is returned if it meets the failure threshold.

use crate::error::{Error, Result};
use crate::quadrature::{try_integrate_points, QuadratureConfig};
use crate::real::{c, Real};
use crate::special_fn::gamma::{ln_rgamma_signed, rgamma};
use crate::special_fn::{EvalResult, Method};
use crate::sum::Compensated;

const MAX_TAYLOR_TERMS: usize = 20_000;
const MAX_ASYMPTOTIC_TERMS: usize = 50;
/// Beyond this the Kummer-transformed series for `β = 1` gets long.
const KUMMER_LIMIT: f64 = 1.0e4;
/// `exp(-60)` is far below any tolerance relative to `E_{β,ρ}(-x)`.
const KERNEL_CUTOFF: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlConfig<T> {
    /// Taylor series is tried first for `|z| ≤ taylor_radius`.
    pub taylor_radius: T,
    /// Asymptotic expansion is tried first for `|z| ≥ asymptotic_radius`.
    pub asymptotic_radius: T,
    /// When false only the method chosen by the radii is used.
    pub fallback: bool,
}

impl<T: Real> Default for MlConfig<T> {
    fn default() -> Self {
        Self {
            taylor_radius: c(5.0),
            asymptotic_radius: c(20.0),
            fallback: true,
        }
    }
}

/// Working tolerance a method must reach to be accepted without comparison.
fn target_rel<T: Real>() -> T {
    c::<T>(1e-13).max(c::<T>(100.0) * T::epsilon())
}

/// Anything worse than this is reported as a convergence failure.
fn failure_rel<T: Real>() -> T {
    c::<T>(1e-8).max(c::<T>(1e3) * T::epsilon())
}

/// `E_{β,ρ}(z)` with the default switch radii.
pub fn mittag_leffler<T: Real>(beta: T, rho: T, z: T) -> Result<EvalResult<T>> {
    mittag_leffler_with(beta, rho, z, &MlConfig::default())
}

pub fn mittag_leffler_with<T: Real>(beta: T, rho: T, z: T, cfg: &MlConfig<T>) -> Result<EvalResult<T>> {
    check_args(beta, rho, z)?;
    if z == T::zero() {
        let v = rgamma(rho);
        return Ok(EvalResult::new(v, T::epsilon() * v.abs(), Method::ClosedForm));
    }
    if z > T::zero() {
        // positive axis: all terms share a sign for ρ > 0, plain Taylor
        return accept(taylor(beta, rho, z));
    }
    let x = -z;
    if beta == T::one() {
        return accept(beta_one(rho, x, cfg));
    }

    let order: &[Method] = if x <= cfg.taylor_radius {
        &[Method::TaylorSeries, Method::AsymptoticExpansion, Method::SpectralIntegral]
    } else if x >= cfg.asymptotic_radius {
        &[Method::AsymptoticExpansion, Method::SpectralIntegral, Method::TaylorSeries]
    } else if beta < T::one() {
        &[Method::SpectralIntegral, Method::AsymptoticExpansion, Method::TaylorSeries]
    } else {
        &[Method::TaylorSeries, Method::AsymptoticExpansion]
    };

    let mut best: Option<EvalResult<T>> = None;
    for &m in order {
        if m == Method::SpectralIntegral && beta > T::one() {
            continue;
        }
        let r = by_method(beta, rho, x, m)?;
        if r.is_sound() && r.abs_error_est <= target_rel::<T>() * r.value.abs() {
            return Ok(r);
        }
        best = match best {
            Some(b) if b.is_sound() && (!r.is_sound() || b.abs_error_est <= r.abs_error_est) => Some(b),
            _ => Some(r),
        };
        if !cfg.fallback {
            break;
        }
    }
    accept(Ok(best.expect("at least one method is always tried")))
}

/// Evaluate with a specific method, bypassing selection (for seam checks).
///
/// `ClosedForm` is only meaningful for `β = 1`.
pub fn mittag_leffler_by<T: Real>(beta: T, rho: T, z: T, method: Method) -> Result<EvalResult<T>> {
    check_args(beta, rho, z)?;
    if z > T::zero() {
        return Err(Error::domain("method-specific evaluation is only defined for z <= 0"));
    }
    let x = -z;
    match method {
        Method::ClosedForm if beta == T::one() => beta_one(rho, x, &MlConfig::default()),
        Method::ClosedForm | Method::AdaptiveQuadrature => {
            Err(Error::domain(format!("no {method} evaluator for E_(beta,rho)")))
        }
        m => by_method(beta, rho, x, m),
    }
}

/// Partial sum `-Σ_{n=1}^{m} z^{-n} / Γ(ρ - βn)` for `z < 0`, `m ≥ 1`.
/// Terms where `Γ` has a pole are zero.
pub fn mittag_leffler_asymptotic<T: Real>(beta: T, rho: T, z: T, m: usize) -> Result<T> {
    if !(z < T::zero()) || m < 1 {
        return Err(Error::domain("asymptotic expansion requires z < 0 and m >= 1"));
    }
    let mut acc = Compensated::new();
    let inv = z.recip();
    let mut p = T::one();
    for n in 1..=m {
        p = p * inv;
        acc.add(-p * rgamma(rho - beta * T::from_count(n)));
    }
    Ok(acc.value())
}

fn check_args<T: Real>(beta: T, rho: T, z: T) -> Result<()> {
    if !(beta > T::zero() && beta < c(2.0)) {
        return Err(Error::domain(format!("mittag_leffler requires 0 < beta < 2, got {beta}")));
    }
    if !rho.is_finite() || !z.is_finite() {
        return Err(Error::domain("mittag_leffler requires finite rho and z"));
    }
    Ok(())
}

fn accept<T: Real>(r: Result<EvalResult<T>>) -> Result<EvalResult<T>> {
    let r = r?;
    let scale = r.value.abs().max(T::min_positive_value());
    if r.is_sound() && r.abs_error_est <= failure_rel::<T>() * scale {
        Ok(r)
    } else {
        Err(Error::Convergence {
            what: "mittag_leffler",
            achieved: (r.abs_error_est / scale).to_f64_lossy(),
            required: failure_rel::<T>().to_f64_lossy(),
        })
    }
}

fn by_method<T: Real>(beta: T, rho: T, x: T, m: Method) -> Result<EvalResult<T>> {
    match m {
        Method::TaylorSeries => taylor(beta, rho, -x),
        Method::AsymptoticExpansion => Ok(asymptotic(beta, rho, x)),
        Method::SpectralIntegral => spectral(beta, rho, x),
        _ => unreachable!("selection only yields series, asymptotic or spectral"),
    }
}

/// Direct series with an error estimate covering rounding of the log-space
/// terms, compensated summation and truncation.
fn taylor<T: Real>(beta: T, rho: T, z: T) -> Result<EvalResult<T>> {
    let eps = T::epsilon();
    let ln_x = z.abs().ln();
    let negative = z < T::zero();
    let overflow = c::<T>(0.95) * T::max_value().ln();

    let mut acc = Compensated::new();
    let mut term_err = T::zero();
    let mut last = T::zero();
    let mut prev_lt = T::infinity();
    let mut quiet = 0;
    let mut converged = false;
    for n in 0..MAX_TAYLOR_TERMS {
        let nf = T::from_count(n);
        let Some((lr, sign)) = ln_rgamma_signed(beta * nf + rho) else {
            continue;
        };
        let lt = nf * ln_x + lr;
        if lt > overflow {
            return Ok(EvalResult::new(T::nan(), T::infinity(), Method::TaylorSeries));
        }
        let mag = lt.exp();
        let t = if negative && n % 2 == 1 { -sign * mag } else { sign * mag };
        acc.add(t);
        term_err = term_err + mag * ((nf * ln_x).abs() + lr.abs() + T::one());
        last = mag;
        if lt < prev_lt && mag <= c::<T>(0.25) * eps * acc.value().abs() {
            quiet += 1;
            if quiet >= 3 {
                converged = true;
                break;
            }
        } else {
            quiet = 0;
        }
        prev_lt = lt;
    }
    let value = acc.value();
    let err = if converged {
        eps * (c::<T>(2.0) * acc.abs_sum() + term_err) + last
    } else {
        T::infinity()
    };
    Ok(EvalResult::new(value, err, Method::TaylorSeries))
}

/// Optimally truncated algebraic expansion at `z = -x`.
fn asymptotic<T: Real>(beta: T, rho: T, x: T) -> EvalResult<T> {
    let eps = T::epsilon();
    let ln_x = x.ln();
    let ln_pi = T::PI().ln();
    // envelope of |x^{-n}/Γ(ρ-βn)|: the reflection formula without |sin|
    let envelope = |n: usize| -> T {
        let nf = T::from_count(n);
        let arg = beta * nf + T::one() - rho;
        let reflected = if arg > T::zero() {
            (arg.ln_gamma_signed().0 - ln_pi - nf * ln_x).exp()
        } else {
            T::zero()
        };
        let direct = (-nf * ln_x).exp() * rgamma(rho - beta * nf).abs();
        reflected.max(direct)
    };
    let envs: Vec<T> = (1..=MAX_ASYMPTOTIC_TERMS + 1).map(envelope).collect();
    let mut m = 1;
    for k in 1..=MAX_ASYMPTOTIC_TERMS {
        if envs[k] < envs[m] {
            m = k;
        }
    }
    // envs[m] is the envelope of term m + 1, the first one omitted

    let mut acc = Compensated::new();
    let mut p = T::one();
    let inv = -(x.recip());
    for n in 1..=m {
        p = p * inv;
        acc.add(-p * rgamma(rho - beta * T::from_count(n)));
    }
    let mut value = acc.value();
    let mut err = envs[m] + c::<T>(4.0) * eps * acc.abs_sum();

    if beta > T::one() {
        // two conjugate branches (2/β) Re[ζ^{1-ρ} e^ζ], ζ = x^{1/β} e^{iπ/β}
        let r = x.powf(beta.recip());
        let theta = T::PI() / beta;
        let amp = (c::<T>(2.0) / beta) * ((T::one() - rho) * r.ln() + r * theta.cos()).exp();
        let phase = (T::one() - rho) * theta + r * theta.sin();
        let branch = amp * phase.cos();
        value = value + branch;
        err = err + eps * amp * (T::one() + phase.abs());
    }
    EvalResult::new(value, err, Method::AsymptoticExpansion)
}

/// Kernel integral for `0 < β < 1`; `ρ > 1` is reduced to `(1-β, 1]` first.
fn spectral<T: Real>(beta: T, rho: T, x: T) -> Result<EvalResult<T>> {
    if !(beta < T::one()) {
        return Err(Error::domain("spectral representation requires 0 < beta < 1"));
    }
    if rho <= T::one() {
        return kernel_integral(beta, rho, x);
    }
    let steps = ((rho - T::one()) / beta).ceil().to_usize().unwrap_or(0);
    let rho0 = rho - beta * T::from_count(steps);
    let base = kernel_integral(beta, rho0, x)?;
    // E_{β,r+β}(-x) = (1/Γ(r) - E_{β,r}(-x)) / x
    let eps = T::epsilon();
    let mut v = base.value;
    let mut err = base.abs_error_est;
    for j in 0..steps {
        let r = rho0 + beta * T::from_count(j);
        let g = rgamma(r);
        let next = (g - v) / x;
        err = (err + eps * (g.abs() + v.abs())) / x + eps * next.abs();
        v = next;
    }
    Ok(EvalResult::new(v, err, Method::SpectralIntegral))
}

/// `E_{β,ρ}(-x) = ∫₀^∞ K(χ) dχ` with
///
/// ```text
/// K(χ) = χ^{(1-ρ)/β} e^{-χ^{1/β}} [χ sin(π(1-ρ)) + x sin(π(1-ρ+β))]
///        / (βπ (χ² + 2χx cos(βπ) + x²))
/// ```
///
/// valid for `0 < β < 1`, `ρ < 1 + β`, `x > 0`.
fn kernel_integral<T: Real>(beta: T, rho: T, x: T) -> Result<EvalResult<T>> {
    let pi = T::PI();
    let inv_beta = beta.recip();
    let power = (T::one() - rho) * inv_beta;
    let s1 = (pi * (T::one() - rho)).sin();
    let s2 = (pi * (T::one() - rho + beta)).sin();
    let cos_b = (beta * pi).cos();
    let sin_b = (beta * pi).sin();
    let pref = (beta * pi).recip();

    let kernel = |chi: T| -> Result<T> {
        if chi <= T::zero() {
            return Ok(if power == T::zero() {
                pref * s2 / x
            } else {
                T::zero()
            });
        }
        let u = chi.powf(inv_beta);
        let num = chi * s1 + x * s2;
        // χ² + 2χx cos(βπ) + x², without cancellation near the resonance
        let den = (chi + x * cos_b).powi(2) + (x * sin_b).powi(2);
        Ok(pref * (power * chi.ln() - u).exp() * num / den)
    };

    let chi_max = c::<T>(KERNEL_CUTOFF).powf(beta);
    let mut pts = vec![T::zero(), chi_max];
    for &u in &[1e-9, 1e-6, 1e-3, 0.05, 0.25, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0] {
        pts.push(c::<T>(u).powf(beta));
    }
    if cos_b < T::zero() {
        // near-resonance of the denominator at χ = -x cos(βπ)
        let centre = -x * cos_b;
        let width = x * sin_b;
        for &k in &[-4.0, -1.0, -0.25, 0.0, 0.25, 1.0, 4.0] {
            pts.push(centre + c::<T>(k) * width);
        }
    }
    pts.retain(|&p| p >= T::zero() && p <= chi_max && p.is_finite());
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() <= T::epsilon() * b.abs().max(T::min_positive_value()));

    let cfg = QuadratureConfig {
        rel_tol: c::<T>(5e-14).max(c::<T>(200.0) * T::epsilon()),
        abs_tol: T::min_positive_value(),
        max_subdivisions: 600,
        nodes_per_panel: 21,
    };
    match try_integrate_points(kernel, &pts, &cfg) {
        Ok(r) => Ok(EvalResult::new(r.value, r.abs_error_est, Method::SpectralIntegral)),
        Err(Error::Tolerance { value, error, .. }) => {
            Ok(EvalResult::new(T::lit(value), T::lit(error), Method::SpectralIntegral))
        }
        Err(e) => Err(e),
    }
}

/// `β = 1`: `E_{1,1}(-x) = e^{-x}`; `ρ > 1` via the Kummer transformation
/// `E_{1,ρ}(-x) = e^{-x}/Γ(ρ) Σ (ρ-1)/(ρ-1+n) xⁿ/n!` (positive terms);
/// `ρ < 1` by the recurrence `E_{1,r} = 1/Γ(r) - x E_{1,r+1}`.
fn beta_one<T: Real>(rho: T, x: T, cfg: &MlConfig<T>) -> Result<EvalResult<T>> {
    let eps = T::epsilon();
    if rho == T::one() {
        let v = (-x).exp();
        return Ok(EvalResult::new(v, eps * v, Method::ClosedForm));
    }
    if x > c(KUMMER_LIMIT) {
        return Ok(asymptotic(T::one(), rho, x));
    }
    if rho > T::zero() {
        let k = kummer(rho, x)?;
        if rho < T::one() && x <= cfg.taylor_radius {
            let t = taylor(T::one(), rho, -x)?;
            if t.is_sound() && t.abs_error_est < k.abs_error_est {
                return Ok(t);
            }
        }
        return Ok(k);
    }
    // ρ ≤ 0: E_{1,r} = 1/Γ(r) - x E_{1,r+1} downward from (0, 1]
    let steps = (-rho).floor().to_usize().unwrap_or(0) + 1;
    let top = beta_one(rho + T::from_count(steps), x, cfg)?;
    let mut v = top.value;
    let mut err = top.abs_error_est;
    for j in (0..steps).rev() {
        let r = rho + T::from_count(j);
        let g = rgamma(r);
        let next = g - x * v;
        err = x * err + eps * (g.abs() + (x * v).abs());
        v = next;
    }
    let rec = EvalResult::new(v, err, Method::ClosedForm);
    if x <= cfg.taylor_radius {
        let t = taylor(T::one(), rho, -x)?;
        if t.is_sound() && t.abs_error_est < rec.abs_error_est {
            return Ok(t);
        }
    }
    Ok(rec)
}

/// `E_{1,ρ}(-x) = e^{-x}/Γ(ρ) Σ c_n xⁿ/n!`, `c_0 = 1`, `c_n = (ρ-1)/(ρ-1+n)`,
/// for `ρ > 0`, `ρ ≠ 1`. All `c_n` share a sign for `n ≥ 1`.
fn kummer<T: Real>(rho: T, x: T) -> Result<EvalResult<T>> {
    let eps = T::epsilon();
    let a = rho - T::one();
    let ln_x = x.ln();
    let (lg, gsign) = rho.ln_gamma_signed();
    let base = -x - lg;
    let mut acc = Compensated::new();
    let mut n = 0usize;
    loop {
        let nf = T::from_count(n);
        let t = if n == 0 {
            base.exp()
        } else {
            let cn = a / (a + nf);
            cn.signum() * (base + nf * ln_x - (nf + T::one()).ln_gamma_signed().0 + cn.abs().ln()).exp()
        };
        acc.add(t);
        if nf > x && t.abs() <= c::<T>(0.25) * eps * acc.value().abs() {
            break;
        }
        n += 1;
        if n > MAX_TAYLOR_TERMS + x.to_usize().unwrap_or(0) {
            return Err(Error::Convergence {
                what: "mittag_leffler (beta = 1 series)",
                achieved: f64::NAN,
                required: eps.to_f64_lossy(),
            });
        }
    }
    let v = acc.value();
    let terms = T::from_count(n + 1);
    let err = eps * acc.abs_sum() * (c::<T>(4.0) + terms.sqrt() + (x + base.abs()) * c(2.0));
    let sign = if gsign < 0 { -T::one() } else { T::one() };
    Ok(EvalResult::new(sign * v, err, Method::ClosedForm))
}
