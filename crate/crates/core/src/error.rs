use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("an upset needs at least one generator")]
    EmptyGenerators,

    #[error("shift parameter must be nonnegative, got {0}")]
    NegativeParameter(Rational),

    #[error("operation requires a nonzero module")]
    ZeroModule,

    #[error("source vertex set must be nonempty")]
    EmptySeedSet,

    #[error("vertex {index} out of range for a graph on {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(Rational),

    #[error("summand counts differ: {0} vs {1}")]
    CountMismatch(usize, usize),

    #[error("summand count {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("invalid generation bounds: {0}")]
    InvalidBounds(String),

    #[error("unsupported dimension {0}: plotting requires d = 2")]
    UnsupportedDimension(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
