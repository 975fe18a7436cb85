use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported parameter: {0}")]
    Parameter(String),
    #[error("{mu} is not contained in {lambda}")]
    Containment { lambda: Partition, mu: Partition },
    #[error("pole: {0}")]
    Pole(String),
    #[error("gamma pole at argument {0}")]
    GammaPole(f64),
    #[error("non-finite intermediate value: {0}")]
    Overflow(String),
    #[error("degree truncation reached; exact result unavailable")]
    Truncated,
    #[error("pairwise numerator not divisible by (x_{i} - x_{j}); input is not symmetric")]
    NotSymmetric { i: usize, j: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("series accuracy: {0}")]
    Accuracy(String),
    #[error("degenerate importance weights")]
    DegenerateWeights,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
