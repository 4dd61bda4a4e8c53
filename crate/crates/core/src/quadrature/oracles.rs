//! Integral oracles for the Debye function and the Euler transform.

use crate::error::{Error, Result};
use crate::formfactor::GgbmParams;
use crate::quadrature::{graded_mesh, try_integrate_points, QuadratureConfig};
use crate::real::{c, Real};
use crate::special_fn::{mittag_leffler, EvalResult, Method};
use crate::sum::Compensated;

/// `2 ∫₀¹ (1-τ) E_β(-y² τ^α) dτ`, using only the `ρ = 1` Mittag-Leffler
/// evaluator. The mesh is graded geometrically toward `τ = 0`, down to the
/// scale `y^{-2/α}` where the integrand turns over.
pub fn debye_quadrature<T: Real>(y: T, params: &GgbmParams<T>, cfg: &QuadratureConfig<T>) -> Result<EvalResult<T>> {
    if !(y >= T::zero()) || !y.is_finite() {
        return Err(Error::domain(format!("debye_quadrature requires y >= 0, got {y}")));
    }
    let (beta, alpha) = (params.beta(), params.alpha());
    if y == T::zero() {
        return Ok(EvalResult::new(T::one(), T::zero(), Method::AdaptiveQuadrature));
    }
    let u = y * y;
    let levels = mesh_levels(u, alpha);
    let pts = graded_mesh(T::zero(), T::one(), c(0.25), levels);
    let f = |tau: T| -> Result<T> {
        let w = T::one() - tau;
        if tau == T::zero() {
            return Ok(w);
        }
        Ok(w * mittag_leffler(beta, T::one(), -u * tau.powf(alpha))?.value)
    };
    let r = try_integrate_points(f, &pts, cfg)?;
    Ok(r.scaled(c(2.0)))
}

fn mesh_levels<T: Real>(u: T, alpha: T) -> usize {
    // τ* = u^{-1/α}; reach a few levels below it
    let depth = (u.ln() / alpha).max(T::zero()) / c::<T>(4.0).ln();
    let base = depth.ceil().to_usize().unwrap_or(0) + 6;
    if alpha < T::one() {
        base.max(24)
    } else {
        base
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the three-term recurrence.
pub fn gauss_legendre<T: Real>(n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 {
        return Err(Error::domain("gauss_legendre requires n >= 1"));
    }
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, refined in f64 then rounded to T
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                let (_, d) = legendre(n, x);
                dp = d;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = c(-x);
        nodes[n - 1 - i] = c(x);
        weights[i] = c(w);
        weights[n - 1 - i] = c(w);
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    Ok((nodes, weights))
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// Tensor-product Gauss-Legendre approximation of
/// `∫₀¹∫₀¹ E_β(-y²|t-s|^α) ds dt`.
///
/// The square is folded onto the triangle `s < t` and mapped to the unit
/// square with `s = t(1-v)`, so the kink of `|t-s|^α` sits on an edge;
/// for `α < 1` a power substitution in both variables removes it.
pub fn debye_double_integral<T: Real>(y: T, params: &GgbmParams<T>, grid_n: usize) -> Result<T> {
    if grid_n < 16 {
        return Err(Error::domain(format!("debye_double_integral requires grid_n >= 16, got {grid_n}")));
    }
    if !(y >= T::zero()) || !y.is_finite() {
        return Err(Error::domain(format!("debye_double_integral requires y >= 0, got {y}")));
    }
    let (beta, alpha) = (params.beta(), params.alpha());
    let u = y * y;
    let (x, w) = gauss_legendre::<T>(grid_n)?;
    let half = c::<T>(0.5);
    let q = if alpha < T::one() { alpha.recip() } else { T::one() };

    // node a ∈ (0,1) ↦ (a^q, q a^{q-1} weight)
    let mapped: Vec<(T, T)> = x
        .iter()
        .zip(&w)
        .map(|(&xi, &wi)| {
            let a = half * (xi + T::one());
            (a.powf(q), half * wi * q * a.powf(q - T::one()))
        })
        .collect();

    let mut acc = Compensated::new();
    for &(t, wt) in &mapped {
        for &(v, wv) in &mapped {
            let e = mittag_leffler(beta, T::one(), -u * (t * v).powf(alpha))?.value;
            acc.add(wt * wv * t * e);
        }
    }
    Ok(c::<T>(2.0) * acc.value())
}

/// Both sides of
/// `∫₀¹ t^{α_p-1} (1-t)^{σ-1} E_{β,α_p}(x t^β) dt = Γ(σ) E_{β,α_p+σ}(x)`.
///
/// The integral is split at `t = 1/2`; the endpoint weights are absorbed by
/// `t = u^{1/α_p}` on the left and `1-t = v^{1/σ}` on the right.
pub fn verify_euler_transform<T: Real>(
    beta: T,
    alpha_p: T,
    sigma: T,
    x: T,
    cfg: &QuadratureConfig<T>,
) -> Result<(T, T)> {
    if !(alpha_p > T::zero()) || !(sigma > T::zero()) {
        return Err(Error::domain("verify_euler_transform requires alpha_p > 0 and sigma > 0"));
    }
    if !(x <= T::zero()) || !x.is_finite() {
        return Err(Error::domain("verify_euler_transform requires finite x <= 0"));
    }
    let half = c::<T>(0.5);
    let one = T::one();

    let left = |u: T| -> Result<T> {
        let t = u.powf(alpha_p.recip());
        let e = mittag_leffler(beta, alpha_p, x * t.powf(beta))?.value;
        Ok((one - t).powf(sigma - one) * e / alpha_p)
    };
    let right = |v: T| -> Result<T> {
        let t = one - v.powf(sigma.recip());
        let e = mittag_leffler(beta, alpha_p, x * t.powf(beta))?.value;
        Ok(t.powf(alpha_p - one) * e / sigma)
    };
    let u_max = half.powf(alpha_p);
    let v_max = half.powf(sigma);
    let l = try_integrate_points(left, &graded_mesh(T::zero(), u_max, c(0.25), 24), cfg)?;
    let r = try_integrate_points(right, &graded_mesh(T::zero(), v_max, c(0.25), 8), cfg)?;
    let lhs = l.value + r.value;
    let rhs = sigma.tgamma() * mittag_leffler(beta, alpha_p + sigma, x)?.value;
    Ok((lhs, rhs))
}
