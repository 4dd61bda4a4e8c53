//! Special functions on the negative real axis.
//!
//! Every evaluator returns an [`EvalResult`] carrying an absolute error
//! estimate and the method that produced the value.

mod fox_wright;
mod gamma;
mod incgamma;
mod mittag_leffler;

pub use fox_wright::{fox_wright_2psi2, FoxWrightParams};
pub use gamma::{gamma_ln, rgamma};
pub use incgamma::lower_incomplete_gamma;
pub use mittag_leffler::{
    mittag_leffler, mittag_leffler_asymptotic, mittag_leffler_by, mittag_leffler_with, MlConfig,
};

pub(crate) use incgamma::lower_gamma_scaled;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    TaylorSeries,
    AsymptoticExpansion,
    SpectralIntegral,
    ClosedForm,
    AdaptiveQuadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::TaylorSeries => "taylor_series",
            Method::AsymptoticExpansion => "asymptotic_expansion",
            Method::SpectralIntegral => "spectral_integral",
            Method::ClosedForm => "closed_form",
            Method::AdaptiveQuadrature => "adaptive_quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A value with an absolute error estimate and the method that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult<T> {
    pub value: T,
    pub abs_error_est: T,
    pub method: Method,
}

impl<T: Real> EvalResult<T> {
    pub fn new(value: T, abs_error_est: T, method: Method) -> Self {
        Self {
            value,
            abs_error_est,
            method,
        }
    }

    /// Estimated relative error, `abs_error_est / |value|` (infinite at zero).
    pub fn rel_error_est(&self) -> T {
        self.abs_error_est / self.value.abs()
    }

    pub(crate) fn is_sound(&self) -> bool {
        self.value.is_finite() && self.abs_error_est.is_finite() && self.abs_error_est >= T::zero()
    }

    /// Multiply value and error by a constant.
    pub fn scaled(self, k: T) -> Self {
        Self {
            value: self.value * k,
            abs_error_est: self.abs_error_est * k.abs(),
            method: self.method,
        }
    }
}
