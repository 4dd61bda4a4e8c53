//! Debye functions `f_D(y; β, α)`, form factors and size measures of ggBm
//! paths.
//!
//! ```text
//! f_D(y; β, α) = 2 ∫₀¹ (1-τ) E_β(-y² τ^α) dτ
//!              = 2 Σ_j (-y²)^j / [Γ(βj+1)(αj+1)(αj+2)]
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{debye_quadrature, QuadratureConfig};
use crate::real::{c, Real};
use crate::special_fn::{fox_wright_2psi2, lower_gamma_scaled, mittag_leffler, EvalResult, FoxWrightParams, Method};
use crate::sum::Compensated;

/// Beyond `y² = 25` the alternating series is abandoned for quadrature.
const SERIES_LIMIT_U: f64 = 25.0;

/// Parameters of `B^{β,α}`: `0 < β ≤ 1`, `0 < α < 2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams<T>", bound(deserialize = "T: Real + Deserialize<'de>"))]
pub struct GgbmParams<T> {
    beta: T,
    alpha: T,
}

#[derive(Deserialize)]
struct RawParams<T> {
    beta: T,
    alpha: T,
}

impl<T: Real> TryFrom<RawParams<T>> for GgbmParams<T> {
    type Error = Error;
    fn try_from(r: RawParams<T>) -> Result<Self> {
        Self::new(r.beta, r.alpha)
    }
}

impl<T: Real> GgbmParams<T> {
    pub fn new(beta: T, alpha: T) -> Result<Self> {
        if !(beta > T::zero() && beta <= T::one()) {
            return Err(Error::domain(format!("beta must lie in (0, 1], got {beta}")));
        }
        if !(alpha > T::zero() && alpha < c(2.0)) {
            return Err(Error::domain(format!("alpha must lie in (0, 2), got {alpha}")));
        }
        Ok(Self { beta, alpha })
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// `H = α/2`.
    pub fn hurst(&self) -> T {
        self.alpha * c(0.5)
    }

    /// The most specific family these parameters belong to.
    pub fn family(&self) -> DebyeFamily {
        let one = T::one();
        if self.beta == one && self.alpha == one {
            DebyeFamily::StandardBm
        } else if self.beta == one {
            DebyeFamily::FractionalBm
        } else if self.alpha == self.beta {
            DebyeFamily::GreyBm
        } else if self.alpha == one {
            DebyeFamily::AlphaOne
        } else {
            DebyeFamily::General
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DebyeFamily {
    General,
    /// `α = β`
    GreyBm,
    /// `β = 1`
    FractionalBm,
    /// `β = α = 1`
    StandardBm,
    /// `α = 1`
    AlphaOne,
}

impl DebyeFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            DebyeFamily::General => "general",
            DebyeFamily::GreyBm => "grey_bm",
            DebyeFamily::FractionalBm => "fractional_bm",
            DebyeFamily::StandardBm => "standard_bm",
            DebyeFamily::AlphaOne => "alpha_one",
        }
    }
}

impl fmt::Display for DebyeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `β → 0` limit curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitFamily {
    /// `α = β → 0`: `1/(1+y²)`
    GreyBm,
    /// `α = 1`, `β → 0`: `(2/y⁴)(-y² + (1+y²) ln(1+y²))`
    AlphaOne,
}

/// Sampled Debye function.
///
/// `params` is `None` for the `β → 0` limit curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct DebyeCurve<T> {
    pub family: DebyeFamily,
    pub params: Option<GgbmParams<T>>,
    pub ys: Vec<T>,
    pub values: Vec<T>,
    pub methods: Vec<Method>,
    pub abs_errors: Vec<T>,
}

impl<T: Real> DebyeCurve<T> {
    /// Evaluate `f_D(·; β, α)` on `ys` with [`debye_general`].
    pub fn evaluate(params: GgbmParams<T>, ys: &[T]) -> Result<Self> {
        let mut values = Vec::with_capacity(ys.len());
        let mut methods = Vec::with_capacity(ys.len());
        let mut abs_errors = Vec::with_capacity(ys.len());
        for &y in ys {
            let r = debye_general(y, &params)?;
            values.push(r.value);
            methods.push(r.method);
            abs_errors.push(r.abs_error_est);
        }
        let curve = Self {
            family: params.family(),
            params: Some(params),
            ys: ys.to_vec(),
            values,
            methods,
            abs_errors,
        };
        curve.check()?;
        Ok(curve)
    }

    /// Sample a `β → 0` limit curve.
    pub fn limit(family: LimitFamily, ys: &[T]) -> Result<Self> {
        let values = ys.iter().map(|&y| debye_limit_beta0(y, family)).collect::<Result<Vec<_>>>()?;
        let curve = Self {
            family: match family {
                LimitFamily::GreyBm => DebyeFamily::GreyBm,
                LimitFamily::AlphaOne => DebyeFamily::AlphaOne,
            },
            params: None,
            ys: ys.to_vec(),
            abs_errors: values.iter().map(|v| v.abs() * c::<T>(8.0) * T::epsilon()).collect(),
            values,
            methods: vec![Method::ClosedForm; ys.len()],
        };
        curve.check()?;
        Ok(curve)
    }

    /// Check lengths, ordering, normalisation and tail monotonicity.
    pub fn check(&self) -> Result<()> {
        let n = self.ys.len();
        if self.values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.values.len() });
        }
        if self.methods.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.methods.len() });
        }
        if self.abs_errors.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: self.abs_errors.len() });
        }
        if self.ys.iter().any(|&y| !(y > T::zero())) || self.ys.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::domain("curve abscissae must be positive and strictly increasing"));
        }
        if let Some(&v0) = self.values.first() {
            if !(v0 <= T::one() + c(1e-12)) {
                return Err(Error::domain(format!("curve starts above 1: {v0}")));
            }
        }
        let tail = self.ys.iter().position(|&y| y >= c(3.0)).unwrap_or(n);
        if self.values[tail.min(n)..].windows(2).any(|w| !(w[1] <= w[0]) || !(w[1] > T::zero())) {
            return Err(Error::domain("curve tail is not positive and decreasing"));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }
}

/// `n` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid<T: Real>(lo: T, hi: T, n: usize) -> Result<Vec<T>> {
    if !(lo > T::zero() && lo < hi) || n < 2 {
        return Err(Error::domain("log_grid requires 0 < lo < hi and n >= 2"));
    }
    let (a, b) = (lo.ln(), hi.ln());
    let step = (b - a) / T::from_count(n - 1);
    let mut g: Vec<T> = (0..n).map(|i| (a + step * T::from_count(i)).exp()).collect();
    g[0] = lo;
    g[n - 1] = hi;
    Ok(g)
}

/// `n` equally spaced points from `lo` to `hi` inclusive.
pub fn linear_grid<T: Real>(lo: T, hi: T, n: usize) -> Result<Vec<T>> {
    if !(lo < hi) || n < 2 {
        return Err(Error::domain("linear_grid requires lo < hi and n >= 2"));
    }
    let step = (hi - lo) / T::from_count(n - 1);
    let mut g: Vec<T> = (0..n).map(|i| lo + step * T::from_count(i)).collect();
    g[n - 1] = hi;
    Ok(g)
}

fn check_y<T: Real>(y: T) -> Result<()> {
    if !(y >= T::zero()) || !y.is_finite() {
        return Err(Error::domain(format!("y must be finite and >= 0, got {y}")));
    }
    Ok(())
}

/// `f_D(y; β, α)`, dispatching to the closed form of the most specific family.
pub fn debye_general<T: Real>(y: T, params: &GgbmParams<T>) -> Result<EvalResult<T>> {
    check_y(y)?;
    if y == T::zero() {
        return Ok(EvalResult::new(T::one(), T::zero(), Method::ClosedForm));
    }
    match params.family() {
        DebyeFamily::StandardBm => Ok(debye_bm(y)),
        DebyeFamily::FractionalBm => debye_fbm(y, params.alpha()),
        DebyeFamily::GreyBm => debye_gbm(y, params.beta()),
        DebyeFamily::AlphaOne => debye_beta1(y, params.beta()),
        DebyeFamily::General => debye_expansion(y, params),
    }
}

/// `f_D(y; β, α)` without family dispatch: the Fox-Wright series while it
/// is accurate (`y² ≤ 25`), otherwise [`debye_quadrature`].
pub fn debye_expansion<T: Real>(y: T, params: &GgbmParams<T>) -> Result<EvalResult<T>> {
    check_y(y)?;
    let u = y * y;
    let target = c::<T>(1e-13).max(c::<T>(100.0) * T::epsilon());
    if u <= c(SERIES_LIMIT_U) {
        let p = FoxWrightParams::debye(params.beta(), params.alpha());
        if let Ok(r) = fox_wright_2psi2(&p, -u) {
            let r = r.scaled(c(2.0));
            if r.abs_error_est <= target * r.value.abs() {
                return Ok(r);
            }
        }
    }
    let cfg = QuadratureConfig::default()
        .with_rel_tol(c::<T>(1e-12).max(c::<T>(1e3) * T::epsilon()))
        .with_max_subdivisions(2000);
    debye_quadrature(y, params, &cfg)
}

/// Brownian motion: `(2/y⁴)(e^{-y²} - 1 + y²)`.
pub fn debye_bm<T: Real>(y: T) -> EvalResult<T> {
    let u = y * y;
    let eps = T::epsilon();
    if u < c(0.1) {
        // 2 Σ (-u)^j / (j+2)!
        let mut acc = Compensated::new();
        let mut t = T::one();
        let mut fact = c::<T>(2.0);
        for j in 0..20 {
            acc.add(t / fact);
            t = -t * u;
            fact = fact * T::from_count(j + 3);
        }
        let v = c::<T>(2.0) * acc.value();
        return EvalResult::new(v, c::<T>(4.0) * eps * v, Method::ClosedForm);
    }
    let v = c::<T>(2.0) * ((-u).exp_m1() + u) / (u * u);
    EvalResult::new(v, c::<T>(8.0) * eps * v, Method::ClosedForm)
}

/// Grey Brownian motion (`α = β`): `2 E_{β,3}(-y²)`.
pub fn debye_gbm<T: Real>(y: T, beta: T) -> Result<EvalResult<T>> {
    check_y(y)?;
    GgbmParams::new(beta, beta)?;
    Ok(mittag_leffler(beta, c(3.0), -(y * y))?.scaled(c(2.0)))
}

/// Fractional Brownian motion (`β = 1`):
/// `(2/α)[u^{-1/α} γ(1/α, u) - u^{-2/α} γ(2/α, u)]`, `u = y²`.
pub fn debye_fbm<T: Real>(y: T, alpha: T) -> Result<EvalResult<T>> {
    if !(y > T::zero()) || !y.is_finite() {
        return Err(Error::domain(format!("debye_fbm requires y > 0, got {y}")));
    }
    GgbmParams::new(T::one(), alpha)?;
    let u = y * y;
    let a = alpha.recip();
    let g1 = lower_gamma_scaled(a, u)?;
    let g2 = lower_gamma_scaled(a + a, u)?;
    let v = (c::<T>(2.0) / alpha) * (g1 - g2);
    let err = c::<T>(64.0) * T::epsilon() * (c::<T>(2.0) / alpha) * (g1.abs() + g2.abs()) * (T::one() + u.sqrt());
    Ok(EvalResult::new(v, err, Method::ClosedForm))
}

/// `α = 1`: `2 Σ (-y²)^j / [Γ(βj+1)(j+1)(j+2)]`.
pub fn debye_beta1<T: Real>(y: T, beta: T) -> Result<EvalResult<T>> {
    let p = GgbmParams::new(beta, T::one())?;
    debye_expansion(y, &p)
}

/// `β → 0` limit curves.
pub fn debye_limit_beta0<T: Real>(y: T, family: LimitFamily) -> Result<T> {
    check_y(y)?;
    let u = y * y;
    Ok(match family {
        LimitFamily::GreyBm => (T::one() + u).recip(),
        LimitFamily::AlphaOne => {
            if u < c(0.05) {
                // 2 Σ_{k≥2} (-u)^{k-2} / (k(k-1))
                let mut acc = Compensated::new();
                let mut p = T::one();
                for k in 2..24usize {
                    acc.add(p / T::from_count(k * (k - 1)));
                    p = -p * u;
                }
                c::<T>(2.0) * acc.value()
            } else {
                c::<T>(2.0) * ((T::one() + u) * u.ln_1p() - u) / (u * u)
            }
        }
    })
}

/// `S(k)` for a path of length `n`: `f_D(y)` with `y² = n^α |k|²/2`.
pub fn form_factor<T: Real>(k: &[T], d: usize, n: T, params: &GgbmParams<T>) -> Result<EvalResult<T>> {
    if k.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: k.len() });
    }
    if !(n > T::zero()) || !n.is_finite() {
        return Err(Error::domain(format!("path length n must be > 0, got {n}")));
    }
    let k2: T = k.iter().map(|&v| v * v).fold(T::zero(), |s, v| s + v);
    let y = (n.powf(params.alpha()) * k2 * c(0.5)).sqrt();
    debye_general(y, params)
}

/// `R_e² = n^α / Γ(β+1)`.
pub fn end_to_end_sq<T: Real>(params: &GgbmParams<T>, n: T) -> Result<T> {
    if !(n > T::zero()) || !n.is_finite() {
        return Err(Error::domain(format!("path length n must be > 0, got {n}")));
    }
    Ok(n.powf(params.alpha()) / (params.beta() + T::one()).tgamma())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport<T> {
    pub r_e_sq: T,
    pub r_g_sq: T,
    /// `(α+1)(α+2)`
    pub ratio_expected: T,
    pub n: T,
}

impl<T: Real> RadiusReport<T> {
    /// Relative deviation of `r_e² / ((α+1)(α+2))` from `r_g²`.
    pub fn relation_error(&self) -> T {
        ((self.r_e_sq / self.ratio_expected - self.r_g_sq) / self.r_g_sq).abs()
    }
}

/// `R_g² = n^α / [Γ(β+1)(α+1)(α+2)]` together with `R_e²`.
pub fn radius_of_gyration_sq<T: Real>(params: &GgbmParams<T>, n: T) -> Result<RadiusReport<T>> {
    let r_e_sq = end_to_end_sq(params, n)?;
    let a = params.alpha();
    let ratio = (a + T::one()) * (a + c(2.0));
    Ok(RadiusReport {
        r_e_sq,
        r_g_sq: r_e_sq / ratio,
        ratio_expected: ratio,
        n,
    })
}

/// `R_g²` recovered from the curvature of `f_D` at the origin:
/// `1 - f_D(y) ≈ 2 y² R_g² / n^α`, evaluated at a small `y`.
pub fn rg_sq_from_curvature<T: Real>(params: &GgbmParams<T>, n: T, y: T) -> Result<T> {
    if !(y > T::zero()) {
        return Err(Error::domain("curvature extraction requires y > 0"));
    }
    if !(n > T::zero()) || !n.is_finite() {
        return Err(Error::domain(format!("path length n must be > 0, got {n}")));
    }
    let f = debye_general(y, params)?.value;
    Ok((T::one() - f) / (c::<T>(2.0) * y * y) * n.powf(params.alpha()))
}

/// `2/Γ(3-β)`, the coefficient of `y^{-2}` in the grey-Bm tail.
pub fn asymptote_gbm_coefficient<T: Real>(beta: T) -> Result<T> {
    if !(beta > T::zero() && beta <= T::one()) {
        return Err(Error::domain(format!("beta must lie in (0, 1], got {beta}")));
    }
    Ok(c::<T>(2.0) / (c::<T>(3.0) - beta).tgamma())
}

/// Least-squares fit `y² f_D(y) ≈ k1 + k2 ln y` over the points with
/// `y ≥ y_min`. Requires `y_min ≥ 10` and at least 8 such points.
pub fn fit_log_asymptote<T: Real>(curve: &DebyeCurve<T>, y_min: T) -> Result<(T, T)> {
    if !(y_min >= c(10.0)) {
        return Err(Error::domain(format!("fit_log_asymptote requires y_min >= 10, got {y_min}")));
    }
    let pts: Vec<(T, T)> = curve
        .ys
        .iter()
        .zip(&curve.values)
        .filter(|(&y, _)| y >= y_min)
        .map(|(&y, &v)| (y.ln(), y * y * v))
        .collect();
    if pts.len() < 8 {
        return Err(Error::InsufficientPoints { needed: 8, have: pts.len() });
    }
    let n = T::from_count(pts.len());
    let mx = pts.iter().map(|p| p.0).collect::<Compensated<T>>().value() / n;
    let my = pts.iter().map(|p| p.1).collect::<Compensated<T>>().value() / n;
    let sxx = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).collect::<Compensated<T>>().value();
    let sxy = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).collect::<Compensated<T>>().value();
    if !(sxx > T::zero()) {
        return Err(Error::domain("fit_log_asymptote needs distinct abscissae"));
    }
    let k2 = sxy / sxx;
    Ok((my - k2 * mx, k2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn p(b: f64, a: f64) -> GgbmParams<f64> {
        GgbmParams::new(b, a).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(GgbmParams::new(0.0, 1.0).is_err());
        assert!(GgbmParams::new(1.1, 1.0).is_err());
        assert!(GgbmParams::new(0.5, 2.0).is_err());
        assert!(GgbmParams::new(0.5, 0.0).is_err());
        assert_eq!(p(0.5, 1.5).hurst(), 0.75);
        let back: GgbmParams<f64> = serde_json::from_str(r#"{"beta":0.5,"alpha":1.5}"#).unwrap();
        assert_eq!(back, p(0.5, 1.5));
        assert!(serde_json::from_str::<GgbmParams<f64>>(r#"{"beta":2.0,"alpha":1.5}"#).is_err());
    }

    #[test]
    fn family_tags() {
        assert_eq!(p(1.0, 1.0).family(), DebyeFamily::StandardBm);
        assert_eq!(p(1.0, 0.4).family(), DebyeFamily::FractionalBm);
        assert_eq!(p(0.4, 0.4).family(), DebyeFamily::GreyBm);
        assert_eq!(p(0.4, 1.0).family(), DebyeFamily::AlphaOne);
        assert_eq!(p(0.4, 1.2).family(), DebyeFamily::General);
    }

    #[test]
    fn normalisation() {
        for &(b, a) in &[(1.0, 1.0), (1.0, 0.5), (0.5, 0.5), (0.3, 1.0), (0.7, 1.3)] {
            assert_eq!(debye_general(0.0, &p(b, a)).unwrap().value, 1.0);
            assert!((debye_expansion(0.0, &p(b, a)).unwrap().value - 1.0).abs() < 1e-15);
        }
        assert!((debye_fbm(1e-6f64, 0.7).unwrap().value - 1.0).abs() < 1e-10);
        assert!(debye_fbm(0.0, 0.7).is_err());
    }

    #[test]
    fn bm_closed_form_branches_meet() {
        let y = 0.1f64.sqrt();
        let below = debye_bm(y * (1.0 - 1e-12)).value;
        let above = debye_bm(y).value;
        assert!(rel(below, above) < 1e-11);
    }

    #[test]
    fn fbm_matches_bm_at_alpha_one() {
        for &y in &[0.01, 0.3, 1.0, 3.0, 12.0] {
            let f = debye_fbm(y, 1.0).unwrap().value;
            assert!(rel(f, debye_bm(y).value) < 1e-12, "y = {y}");
        }
    }

    #[test]
    fn limit_values() {
        assert_eq!(debye_limit_beta0(0.0, LimitFamily::GreyBm).unwrap(), 1.0);
        assert!((debye_limit_beta0(0.5f64, LimitFamily::GreyBm).unwrap() - 0.8).abs() < 1e-15);
        let v = debye_limit_beta0(1.0, LimitFamily::AlphaOne).unwrap();
        assert!(rel(v, 2.0 * (-1.0 + 2.0 * 2f64.ln())) < 1e-14);
        assert_eq!(debye_limit_beta0(0.0, LimitFamily::AlphaOne).unwrap(), 1.0);
        let y = 0.05f64.sqrt();
        let a = debye_limit_beta0(y * (1.0 - 1e-12), LimitFamily::AlphaOne).unwrap();
        let b = debye_limit_beta0(y, LimitFamily::AlphaOne).unwrap();
        assert!(rel(a, b) < 1e-12);
    }

    #[test]
    fn form_factor_reduction() {
        let bm = p(1.0, 1.0);
        assert_eq!(form_factor(&[0.0, 0.0], 2, 3.0, &bm).unwrap().value, 1.0);
        let s = form_factor(&[2f64.sqrt()], 1, 1.0, &bm).unwrap().value;
        assert!(rel(s, 2.0 / std::f64::consts::E) < 1e-14);
        let g = form_factor(&[1.0], 1, 4.0, &p(0.5, 0.5)).unwrap().value;
        assert!(rel(g, debye_gbm(1.0, 0.5).unwrap().value) < 1e-14);
        assert!(matches!(
            form_factor(&[1.0, 1.0], 3, 1.0, &bm),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn radii() {
        assert_eq!(end_to_end_sq(&p(1.0, 1.0), 3.0).unwrap(), 3.0);
        let e = end_to_end_sq(&p(0.5, 1.0), 1.0).unwrap();
        assert!(rel(e, 2.0 / std::f64::consts::PI.sqrt()) < 1e-14);
        let r = radius_of_gyration_sq(&p(1.0, 1.0), 5.0).unwrap();
        assert!((r.r_e_sq / r.r_g_sq - 6.0).abs() < 1e-14);
        let q = radius_of_gyration_sq(&p(0.5, 1.5), 2.0).unwrap();
        let expected = 2f64.powf(1.5) / (libm::tgamma(1.5) * 2.5 * 3.5);
        assert!(rel(q.r_g_sq, expected) < 1e-14);
        assert!(q.relation_error() < 1e-15);
        assert!(end_to_end_sq(&p(0.5, 1.5), 0.0).is_err());
    }

    #[test]
    fn curvature_recovers_rg() {
        let q = p(0.5, 1.5);
        let rg = rg_sq_from_curvature(&q, 2.0, 1e-3).unwrap();
        let exact = radius_of_gyration_sq(&q, 2.0).unwrap().r_g_sq;
        assert!(rel(rg, exact) < 1e-4);
    }

    #[test]
    fn gbm_coefficient() {
        assert_eq!(asymptote_gbm_coefficient(1.0).unwrap(), 2.0);
        let c = asymptote_gbm_coefficient(0.5).unwrap();
        assert!(rel(c, 8.0 / (3.0 * std::f64::consts::PI.sqrt())) < 1e-14);
        assert!(asymptote_gbm_coefficient(0.0).is_err());
    }

    #[test]
    fn fit_recovers_synthetic_constants() {
        let ys = log_grid(10.0, 1000.0, 30).unwrap();
        let values: Vec<f64> = ys.iter().map(|y: &f64| (1.5 - 0.25 * y.ln()) / (y * y)).collect();
        let curve = DebyeCurve {
            family: DebyeFamily::General,
            params: None,
            methods: vec![Method::ClosedForm; ys.len()],
            abs_errors: vec![0.0; ys.len()],
            ys,
            values,
        };
        let (k1, k2) = fit_log_asymptote(&curve, 10.0).unwrap();
        assert!((k1 - 1.5).abs() < 1e-12 && (k2 + 0.25).abs() < 1e-12);
        assert!(fit_log_asymptote(&curve, 5.0).is_err());
        assert!(matches!(
            fit_log_asymptote(&curve, 900.0),
            Err(Error::InsufficientPoints { needed: 8, .. })
        ));
    }

    #[test]
    fn curve_invariants() {
        let ys = log_grid(0.05, 20.0, 40).unwrap();
        let c = DebyeCurve::evaluate(p(0.7, 1.3), &ys).unwrap();
        assert_eq!(c.len(), 40);
        assert!(c.check().is_ok());
        let mut bad = c.clone();
        bad.ys.swap(3, 4);
        assert!(bad.check().is_err());
        let mut short = c.clone();
        short.methods.pop();
        assert!(short.check().is_err());
        let lim = DebyeCurve::limit(LimitFamily::AlphaOne, &ys).unwrap();
        assert!(lim.params.is_none());
    }

    #[test]
    fn grids() {
        let g = log_grid(0.01, 30.0, 200).unwrap();
        assert_eq!(g.len(), 200);
        assert_eq!(g[0], 0.01);
        assert_eq!(g[199], 30.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(log_grid(0.0, 1.0, 3).is_err());
        let l = linear_grid(0.0, 1.0, 5).unwrap();
        assert_eq!(l, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }
}
