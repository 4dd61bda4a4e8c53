//! Scalar abstraction shared by the numerical modules.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar with the gamma-function primitives the crate needs.
///
/// Implemented for `f32` and `f64`. Gamma evaluations are delegated to the
/// `libm` ports of the musl routines.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
    /// `ln|Γ(x)|` together with the sign of `Γ(x)`.
    fn ln_gamma_signed(self) -> (Self, i32);

    /// `Γ(x)`.
    fn tgamma(self) -> Self;

    /// Lossless for `f64`, rounding for `f32`.
    fn lit(x: f64) -> Self;

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_count(n: usize) -> Self {
        <Self as Real>::lit(n as f64)
    }
}

impl Real for f64 {
    #[inline]
    fn ln_gamma_signed(self) -> (Self, i32) {
        libm::lgamma_r(self)
    }

    #[inline]
    fn tgamma(self) -> Self {
        libm::tgamma(self)
    }

    #[inline]
    fn lit(x: f64) -> Self {
        x
    }
}

impl Real for f32 {
    #[inline]
    fn ln_gamma_signed(self) -> (Self, i32) {
        libm::lgammaf_r(self)
    }

    #[inline]
    fn tgamma(self) -> Self {
        libm::tgammaf(self)
    }

    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }
}

/// Shorthand for [`Real::lit`].
#[inline]
pub(crate) fn c<T: Real>(x: f64) -> T {
    T::lit(x)
}

/// True when `x` is a non-positive integer, i.e. a pole of `Γ`.
#[inline]
pub(crate) fn is_gamma_pole<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}
