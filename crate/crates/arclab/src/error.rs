use thiserror::Error;

/// Errors produced by group and graph computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("point {0} out of range for degree {1}")]
    PointOutOfRange(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0} is not a subgroup of the parent group")]
    NotASubgroup(String),
    #[error("group is intransitive where a transitive group is required")]
    Intransitive,
    #[error("enumeration threshold exceeded: {0}")]
    ThresholdExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("out of computational scope: {0}")]
    OutOfScope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
