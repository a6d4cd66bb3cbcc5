use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: u64, right: u64 },

    #[error("{lower} is not dominated by {upper}")]
    NotDominated { lower: Partition, upper: Partition },

    #[error("negative entry {value} at position {index}")]
    NegativeEntry { index: usize, value: i64 },

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("invalid binomial index ({n}, {k})")]
    InvalidIndex { n: i64, k: i64 },

    #[error("polynomial is not invariant under q -> 1/q")]
    NotCentred,

    #[error("support mixes exponent parities")]
    NotDecomposable,

    #[error("family term {index} is not a partition")]
    InvalidFamilyPoint { index: u64 },

    #[error("lemma hypothesis violated at index {index}")]
    HypothesisViolated { index: usize },

    #[error("tableau is not a valid input for the injection: {0}")]
    NotLrInput(String),

    #[error("injection produced a non-semistandard image: {0}")]
    InternalNonSemistandard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
