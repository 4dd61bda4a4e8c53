//! Adaptive quadrature and the integral oracles built on it.
//!
//! The oracles in [`oracles`] only ever call the `ρ = 1` Mittag-Leffler
//! evaluator (plus `E_{β,α_p}` for the Euler-transform check), never the
//! Fox-Wright or Debye series, so agreement with [`crate::formfactor`] is a
//! genuine cross-check.

mod kronrod;
pub mod oracles;

pub use oracles::{debye_double_integral, debye_quadrature, gauss_legendre, verify_euler_transform};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::special_fn::{EvalResult, Method};
use crate::sum::Compensated;
use kronrod::KronrodRule;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig<T> {
    pub rel_tol: T,
    pub abs_tol: T,
    /// Maximum number of panel bisections.
    pub max_subdivisions: usize,
    /// Kronrod points per panel; 15 or 21.
    pub nodes_per_panel: usize,
}

impl<T: Real> Default for QuadratureConfig<T> {
    fn default() -> Self {
        let eps = T::epsilon();
        Self {
            rel_tol: c::<T>(1e-10).max(c::<T>(1e3) * eps),
            abs_tol: c::<T>(1e-14).max(eps * eps),
            max_subdivisions: 200,
            nodes_per_panel: 15,
        }
    }
}

impl<T: Real> QuadratureConfig<T> {
    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    pub fn with_nodes(mut self, nodes: usize) -> Self {
        self.nodes_per_panel = nodes;
        self
    }

    fn validate(&self) -> Result<KronrodRule<T>> {
        if !(self.rel_tol > T::zero()) || !(self.abs_tol > T::zero()) {
            return Err(Error::domain("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        KronrodRule::new(self.nodes_per_panel).ok_or_else(|| {
            Error::domain(format!(
                "unsupported nodes_per_panel {} (use 15 or 21)",
                self.nodes_per_panel
            ))
        })
    }
}

/// `∫_a^b f` by globally adaptive Gauss-Kronrod bisection.
pub fn integrate_adaptive<T, F>(mut f: F, a: T, b: T, cfg: &QuadratureConfig<T>) -> Result<EvalResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    if !(a < b) {
        return Err(Error::domain(format!("integrate_adaptive requires a < b, got [{a}, {b}]")));
    }
    try_integrate_points(|x| Ok(f(x)), &[a, b], cfg)
}

/// Adaptive integration over `points[0]..points[last]` with the given
/// breakpoints as initial panel boundaries. The integrand may fail, in which
/// case the error is propagated unchanged.
pub fn try_integrate_points<T, F>(mut f: F, points: &[T], cfg: &QuadratureConfig<T>) -> Result<EvalResult<T>>
where
    T: Real,
    F: FnMut(T) -> Result<T>,
{
    let rule = cfg.validate()?;
    if points.len() < 2 {
        return Err(Error::domain("need at least two integration limits"));
    }
    if points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::domain("integration breakpoints must be strictly increasing"));
    }

    struct Panel<T> {
        a: T,
        b: T,
        value: T,
        error: T,
    }

    let mut panels = Vec::with_capacity(points.len() + cfg.max_subdivisions);
    for w in points.windows(2) {
        let est = rule.apply(&mut f, w[0], w[1])?;
        panels.push(Panel {
            a: w[0],
            b: w[1],
            value: est.value,
            error: est.error,
        });
    }

    let mut bisections = 0;
    loop {
        let total: T = panels.iter().map(|p| p.value).collect::<Compensated<T>>().value();
        let err: T = panels.iter().map(|p| p.error).fold(T::zero(), |s, e| s + e);
        let target = cfg.abs_tol.max(cfg.rel_tol * total.abs());
        if err <= target {
            return Ok(EvalResult::new(total, err, Method::AdaptiveQuadrature));
        }
        if bisections >= cfg.max_subdivisions {
            return Err(Error::Tolerance {
                subdivisions: bisections,
                value: total.to_f64_lossy(),
                error: err.to_f64_lossy(),
            });
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .fold((0, T::neg_infinity()), |(bi, be), (i, p)| {
                if p.error > be {
                    (i, p.error)
                } else {
                    (bi, be)
                }
            });
        let (a, b) = (panels[worst].a, panels[worst].b);
        let mid = c::<T>(0.5) * (a + b);
        if !(mid > a && mid < b) {
            // panel cannot be split further in this precision
            return Err(Error::Tolerance {
                subdivisions: bisections,
                value: total.to_f64_lossy(),
                error: err.to_f64_lossy(),
            });
        }
        let left = rule.apply(&mut f, a, mid)?;
        let right = rule.apply(&mut f, mid, b)?;
        panels[worst] = Panel {
            a,
            b: mid,
            value: left.value,
            error: left.error,
        };
        panels.push(Panel {
            a: mid,
            b,
            value: right.value,
            error: right.error,
        });
        bisections += 1;
    }
}

/// Breakpoints `a, a + (b-a) r^{levels}, ..., a + (b-a) r, b` graded
/// geometrically toward `a`.
pub fn graded_mesh<T: Real>(a: T, b: T, ratio: T, levels: usize) -> Vec<T> {
    let mut pts = Vec::with_capacity(levels + 2);
    pts.push(a);
    let width = b - a;
    for k in (1..=levels).rev() {
        let p = a + width * ratio.powi(k as i32);
        if p > *pts.last().unwrap() && p < b {
            pts.push(p);
        }
    }
    pts.push(b);
    pts
}
