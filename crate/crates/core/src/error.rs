use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} did not converge: estimated error {achieved:e} exceeds {required:e}")]
    Convergence {
        what: &'static str,
        achieved: f64,
        required: f64,
    },

    #[error("quadrature tolerance not met after {subdivisions} subdivisions: estimated error {error:e} for value {value:e}")]
    Tolerance {
        subdivisions: usize,
        value: f64,
        error: f64,
    },

    #[error("insufficient points: need {needed}, have {have}")]
    InsufficientPoints { needed: usize, have: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("simulation failure: {0}")]
    Simulation(String),

    #[error("invalid ensemble container: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
