//! Gamma function family.

use crate::error::{Error, Result};
use crate::real::{c, is_gamma_pole, Real};

/// `ln Γ(x)` for `x > 0`.
pub fn gamma_ln<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::domain(format!("gamma_ln requires x > 0, got {x}")));
    }
    Ok(x.ln_gamma_signed().0)
}

/// `1/Γ(x)`, taken as zero at the poles `x = 0, -1, -2, ...`.
pub fn rgamma<T: Real>(x: T) -> T {
    if is_gamma_pole(x) {
        return T::zero();
    }
    // tgamma is exact-ish in the range where it does not overflow
    if x < c(170.0) && x > c(-170.0) {
        let g = x.tgamma();
        if g.is_finite() && g != T::zero() {
            return g.recip();
        }
    }
    let (lg, sign) = x.ln_gamma_signed();
    let v = (-lg).exp();
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// `(ln|1/Γ(x)|, sign)`; `None` at a pole, where `1/Γ` vanishes.
pub(crate) fn ln_rgamma_signed<T: Real>(x: T) -> Option<(T, T)> {
    if is_gamma_pole(x) {
        return None;
    }
    let (lg, sign) = x.ln_gamma_signed();
    Some((-lg, if sign < 0 { -T::one() } else { T::one() }))
}
