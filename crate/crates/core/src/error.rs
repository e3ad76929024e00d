use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vectors are linearly dependent over Q")]
    DependentVectors,
    #[error("gcd precondition failed: {0}")]
    BadGcd(String),
    #[error("integer-valued polynomial produced a non-integer value at {0}")]
    NonIntegerValue(String),
    #[error("polynomial is not integer-valued")]
    NotIntegerValued,
    #[error("polynomial has non-integer coefficients")]
    NonIntegerCoefficients,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("delta must satisfy 0 < delta < 1/D (got delta = {delta}, D = {degree})")]
    BadDelta { delta: f64, degree: usize },
    #[error("epsilon out of range: {0}")]
    BadEpsilon(f64),
    #[error("mesh out of range: {0}")]
    BadMesh(f64),
    #[error("point set must have exact rational coordinates")]
    NotExact,
    #[error("(v, w) is not a violating pair")]
    NotAViolation,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("generator system is not certified irreducible")]
    NotCertifiedIrreducible,
    #[error("matrix must have determinant 1")]
    BadDeterminant,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}
