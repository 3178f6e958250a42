use thiserror::Error;

/// Errors reported by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("the zero ideal has no Newton polyhedron")]
    ZeroIdeal,

    #[error("coefficient must be a positive rational, got {0}")]
    NonPositiveCoefficient(String),

    #[error("exponent must be a positive integer")]
    NonPositiveExponent,

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("arithmetic overflow in exponent coordinates")]
    ExponentOverflow,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
