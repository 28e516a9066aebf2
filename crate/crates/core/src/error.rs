use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes under the substitution")]
    DenominatorVanishes,
    #[error("q-binomial with negative lower index {0}")]
    NegativeBinomialIndex(i64),
    #[error("degree {needed} exceeds the degree bound {bound}")]
    DegreeOverflow { needed: usize, bound: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("the empty partition is not allowed here")]
    EmptyPartition,
    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("singular linear system at degree {0}")]
    Singular(usize),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid ordered multiset partition: {0}")]
    InvalidOmp(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("no slot labelled {label} (only {available} available)")]
    NoSlot { label: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
