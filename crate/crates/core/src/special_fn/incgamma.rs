//! Lower incomplete gamma function `γ(a, x) = ∫₀ˣ t^{a-1} e^{-t} dt`.
//!
//! Positive-term series below `x = a + 1`, modified Lentz continued fraction
//! for the complement `Γ(a, x)` above it.

use crate::error::{Error, Result};
use crate::real::{c, Real};
use crate::sum::Compensated;

const MAX_ITER: usize = 10_000;

/// `γ(a, x)` for `a > 0`, `x ≥ 0`.
pub fn lower_incomplete_gamma<T: Real>(a: T, x: T) -> Result<T> {
    check(a, x)?;
    if x == T::zero() {
        return Ok(T::zero());
    }
    if x < a + T::one() {
        // x^a e^{-x} Σ x^n / (a (a+1) ... (a+n))
        let s = series(a, x)?;
        Ok((a * x.ln() - x).exp() * s)
    } else {
        let upper = (a * x.ln() - x).exp() * continued_fraction(a, x)?;
        Ok(a.tgamma() - upper)
    }
}

/// `x^{-a} γ(a, x)`, finite and smooth down to `x = 0` where it equals `1/a`.
pub(crate) fn lower_gamma_scaled<T: Real>(a: T, x: T) -> Result<T> {
    check(a, x)?;
    if x == T::zero() {
        return Ok(a.recip());
    }
    if x < a + T::one() {
        Ok((-x).exp() * series(a, x)?)
    } else {
        let gamma_a = (a.ln_gamma_signed().0 - a * x.ln()).exp();
        Ok(gamma_a - (-x).exp() * continued_fraction(a, x)?)
    }
}

fn check<T: Real>(a: T, x: T) -> Result<()> {
    if !(a > T::zero()) || !(x >= T::zero()) || !a.is_finite() || !x.is_finite() {
        return Err(Error::domain(format!(
            "incomplete gamma requires a > 0 and x >= 0, got a = {a}, x = {x}"
        )));
    }
    Ok(())
}

/// `Σ_{n≥0} x^n / (a (a+1) ... (a+n))`.
fn series<T: Real>(a: T, x: T) -> Result<T> {
    let eps = T::epsilon();
    let mut term = a.recip();
    let mut acc = Compensated::new();
    acc.add(term);
    let mut ap = a;
    for _ in 0..MAX_ITER {
        ap = ap + T::one();
        term = term * x / ap;
        acc.add(term);
        if term < acc.value() * eps * c(0.25) {
            return Ok(acc.value());
        }
    }
    Err(Error::Convergence {
        what: "incomplete gamma series",
        achieved: term.to_f64_lossy(),
        required: eps.to_f64_lossy(),
    })
}

/// Continued fraction for `e^{x} x^{-a} Γ(a, x)`.
fn continued_fraction<T: Real>(a: T, x: T) -> Result<T> {
    let eps = T::epsilon();
    let tiny = T::min_positive_value() / eps;
    let mut b = x + T::one() - a;
    let mut cc = tiny.recip();
    let mut d = b.recip();
    let mut h = d;
    for i in 1..MAX_ITER {
        let fi = T::from_count(i);
        let an = -fi * (fi - a);
        b = b + c(2.0);
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        cc = b + an / cc;
        if cc.abs() < tiny {
            cc = tiny;
        }
        d = d.recip();
        let delta = d * cc;
        h = h * delta;
        if (delta - T::one()).abs() < eps {
            return Ok(h);
        }
    }
    Err(Error::Convergence {
        what: "incomplete gamma continued fraction",
        achieved: f64::NAN,
        required: eps.to_f64_lossy(),
    })
}
