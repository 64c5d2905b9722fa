use thiserror::Error;

/// Errors raised by the algebra, combinatorics and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{y} is not below {w} in the Bruhat order: {reason}")]
    NotBelow { y: String, w: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degree guard {guard} exceeded (reached degree {reached}, {basis_len} basis elements, {pairs} pairs processed)")]
    GuardExceeded {
        guard: u32,
        reached: u32,
        basis_len: usize,
        pairs: usize,
    },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("Groebner basis is truncated")]
    TruncatedBasis,
}

pub type Result<T> = std::result::Result<T, Error>;
