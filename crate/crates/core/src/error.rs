use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point lies outside the open unit disk (rho = {rho})")]
    OutsideDisk { rho: f64 },

    #[error("angle {theta} is within {window} rad of singular angle {singular}")]
    NearSingularity { theta: f64, singular: f64, window: f64 },

    #[error("non-finite value: {0}")]
    NonFinite(String),

    #[error("radial limit did not converge (extrapolation increments {increments:?})")]
    NonConvergence { increments: Vec<f64> },

    #[error("constant term must vanish, found {c0}")]
    NonZeroConstant { c0: Complex64 },

    #[error("Eulerian coefficient overflow in row {row}")]
    Overflow { row: usize },

    #[error("order {n} is outside the supported range 0..={max}")]
    OrderOutOfRange { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numeric_failure(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::Overflow { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
