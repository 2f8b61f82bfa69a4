//! Error type shared by the library.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypermatError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("too many parts: {0}")]
    TooManyParts(String),
    #[error("stabilization failed: values {values:?} at k = {ks:?} did not settle before the cap")]
    Stabilization { ks: Vec<i64>, values: Vec<i64> },
    #[error("n = {0} is out of range (need n >= 3)")]
    BadN(usize),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("path rewriting exceeded depth cap {0}")]
    DepthCap(usize),
}

pub type Result<T> = std::result::Result<T, HypermatError>;
