use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid braid: {0}")]
    InvalidBraid(String),
    #[error("invalid automorphism: {0}")]
    InvalidAut(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
