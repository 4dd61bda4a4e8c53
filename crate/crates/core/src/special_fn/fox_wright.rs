//! Fox-Wright function
//!
//! ```text
//! ₂Ψ₂[(a₁,b₁),(a₂,b₂); (c₁,d₁),(c₂,d₂); x]
//!     = Σ_{n≥0} Γ(a₁+b₁n) Γ(a₂+b₂n) / (Γ(c₁+d₁n) Γ(c₂+d₂n)) · xⁿ/n!
//! ```
//!
//! summed directly for `x ≤ 0`. The series is entire when
//! `d₁ + d₂ - b₁ - b₂ > -1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::special_fn::gamma::ln_rgamma_signed;
use crate::special_fn::{EvalResult, Method};
use crate::sum::Compensated;

const MAX_TERMS: usize = 100_000;
/// Largest tolerated ratio `Σ|tₙ| / |Σ tₙ|` (about 14 digits lost).
const MAX_CANCELLATION: f64 = 1e14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FoxWrightParams<T> {
    pub a1: T,
    pub b1: T,
    pub a2: T,
    pub b2: T,
    pub c1: T,
    pub d1: T,
    pub c2: T,
    pub d2: T,
}

impl<T: Real> FoxWrightParams<T> {
    /// `((1,α),(1,1); (1,β),(3,α))`, for which `2·₂Ψ₂(-y²) = f_D(y; β, α)`.
    pub fn debye(beta: T, alpha: T) -> Self {
        let one = T::one();
        Self {
            a1: one,
            b1: alpha,
            a2: one,
            b2: one,
            c1: one,
            d1: beta,
            c2: c(3.0),
            d2: alpha,
        }
    }

    fn validate(&self) -> Result<()> {
        let all = [self.a1, self.b1, self.a2, self.b2, self.c1, self.d1, self.c2, self.d2];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::domain("Fox-Wright parameters must be finite"));
        }
        if !(self.b1 > T::zero() && self.b2 > T::zero() && self.d1 > T::zero() && self.d2 > T::zero()) {
            return Err(Error::domain("Fox-Wright scale parameters b_i, d_i must be positive"));
        }
        if !(self.a1 > T::zero() && self.a2 > T::zero()) {
            return Err(Error::domain("Fox-Wright numerator shifts a_i must be positive"));
        }
        if !(self.d1 + self.d2 - self.b1 - self.b2 > -T::one()) {
            return Err(Error::domain("Fox-Wright series diverges: need d1 + d2 - b1 - b2 > -1"));
        }
        Ok(())
    }
}

/// `₂Ψ₂(x)` for `x ≤ 0` by compensated summation of log-space terms.
///
/// Fails with [`Error::Convergence`] when cancellation would cost more than
/// about 14 digits.
pub fn fox_wright_2psi2<T: Real>(p: &FoxWrightParams<T>, x: T) -> Result<EvalResult<T>> {
    p.validate()?;
    if !(x <= T::zero()) || !x.is_finite() {
        return Err(Error::domain(format!("fox_wright_2psi2 requires finite x <= 0, got {x}")));
    }
    let eps = T::epsilon();
    let ln_x = x.abs().ln();
    let overflow = c::<T>(0.95) * T::max_value().ln();

    let mut acc = Compensated::new();
    let mut term_err = T::zero();
    let mut last = T::zero();
    let mut prev_lt = T::infinity();
    let mut quiet = 0;
    let mut converged = false;
    for n in 0..MAX_TERMS {
        let nf = T::from_count(n);
        let Some((lr1, s1)) = ln_rgamma_signed(p.c1 + p.d1 * nf) else {
            continue;
        };
        let Some((lr2, s2)) = ln_rgamma_signed(p.c2 + p.d2 * nf) else {
            continue;
        };
        let (lg1, g1) = (p.a1 + p.b1 * nf).ln_gamma_signed();
        let (lg2, g2) = (p.a2 + p.b2 * nf).ln_gamma_signed();
        let lfact = (nf + T::one()).ln_gamma_signed().0;
        let lx = if n == 0 { T::zero() } else { nf * ln_x };
        let lt = lg1 + lg2 + lr1 + lr2 + lx - lfact;
        if lt > overflow {
            return Err(Error::Convergence {
                what: "fox_wright_2psi2",
                achieved: f64::INFINITY,
                required: eps.to_f64_lossy(),
            });
        }
        let mut sign = s1 * s2;
        if (g1 < 0) != (g2 < 0) {
            sign = -sign;
        }
        if n % 2 == 1 && x < T::zero() {
            sign = -sign;
        }
        let mag = lt.exp();
        acc.add(sign * mag);
        let scale = lg1.abs() + lg2.abs() + lr1.abs() + lr2.abs() + lx.abs() + lfact.abs() + T::one();
        term_err = term_err + mag * scale;
        last = mag;
        if x == T::zero() {
            converged = true;
            break;
        }
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
    if !converged {
        return Err(Error::Convergence {
            what: "fox_wright_2psi2",
            achieved: f64::NAN,
            required: eps.to_f64_lossy(),
        });
    }
    let ratio = acc.abs_sum() / value.abs();
    if !(ratio <= c(MAX_CANCELLATION)) {
        return Err(Error::Convergence {
            what: "fox_wright_2psi2 (cancellation)",
            achieved: (ratio * eps).to_f64_lossy(),
            required: (c::<T>(MAX_CANCELLATION) * eps).to_f64_lossy(),
        });
    }
    let err = eps * (c::<T>(2.0) * acc.abs_sum() + term_err) + last;
    Ok(EvalResult::new(value, err, Method::TaylorSeries))
}
