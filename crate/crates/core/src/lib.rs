//! Form factors of generalized grey Brownian motion.
//!
//! The process `B^{β,α}` is an `α/2`-self-similar process with stationary
//! increments whose increment characteristic function is the Mittag-Leffler
//! function `E_β(-|k|²|t-s|^α / 2)`. Its form factor (Debye function) has
//! the series
//!
//! ```text
//! f_D(y; β, α) = 2 Σ_j (-y²)^j / [Γ(βj+1) (αj+1) (αj+2)]
//! ```
//!
//! and reduces to closed forms for Brownian motion (`β = α = 1`),
//! fractional Brownian motion (`β = 1`) and grey Brownian motion (`α = β`).
//!
//! The crate is organised as
//!
//! * [`special_fn`]: gamma family, Mittag-Leffler `E_{β,ρ}` and Fox-Wright `₂Ψ₂`
//!   on the negative real axis, each with an error estimate;
//! * [`quadrature`]: adaptive Gauss-Kronrod integration and the integral
//!   oracles for the Debye function and the Euler transform;
//! * [`formfactor`]: Debye functions for all families, radii and asymptotes;
//! * [`simulate`]: Monte Carlo paths (`√Y` times fractional Brownian motion)
//!   and estimators of the laws they must reproduce;
//! * [`validate`]: the cross-check matrix used by the `ggbm validate` command.
//!
//! Numerical code is generic over [`Real`] (`f32` and `f64`); the `*64`
//! aliases below fix the scalar to `f64`, which is what every published
//! tolerance refers to.

// `!(x > 0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod formfactor;
pub mod quadrature;
pub mod real;
pub mod simulate;
pub mod special_fn;
pub mod sum;
pub mod validate;

pub use error::{Error, Result};
pub use real::Real;
pub use special_fn::{EvalResult, Method};

pub type EvalResult64 = special_fn::EvalResult<f64>;
pub type EvalResult32 = special_fn::EvalResult<f32>;
pub type GgbmParams64 = formfactor::GgbmParams<f64>;
pub type GgbmParams32 = formfactor::GgbmParams<f32>;
pub type DebyeCurve64 = formfactor::DebyeCurve<f64>;
pub type RadiusReport64 = formfactor::RadiusReport<f64>;
pub type QuadratureConfig64 = quadrature::QuadratureConfig<f64>;
pub type FoxWrightParams64 = special_fn::FoxWrightParams<f64>;
pub type MlConfig64 = special_fn::MlConfig<f64>;
