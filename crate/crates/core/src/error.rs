use thiserror::Error;

use crate::polyring::ParseError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("the zero polynomial is not a form")]
    ZeroForm,

    #[error("variable count mismatch: expected {expected}, got {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("invalid number-field modulus: {0}")]
    InvalidModulus(String),

    #[error("expected a cubic form in 5 variables, got degree {degree} in {nvars} variables")]
    NotCubicThreefold { degree: u32, nvars: usize },

    #[error("input is a cone; {0} requires a non-cone")]
    ConeInput(&'static str),

    #[error("retry cap exhausted after {attempts} attempts: {reason}")]
    RetryCapExhausted { attempts: usize, reason: String },

    #[error("unsupported bundle operation: {0}")]
    UnsupportedBundle(String),

    #[error("bundles live on different Grassmannians")]
    ContextMismatch,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
