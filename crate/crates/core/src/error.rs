use thiserror::Error;

/// Errors raised by the partition calculus, the group models and the
/// Hom-space analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("block {0} has odd size")]
    OddBlock(String),
    #[error("not a partition of the legs: {0}")]
    NotAPartition(String),
    #[error("{points} points exceed the configured bound {bound}")]
    BoundExceeded { points: usize, bound: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("composition produced an odd block {0}")]
    OddResultBlock(String),
    #[error("invalid signature p={p}, q={q}, eps={eps}: eps = -1 requires q = 0")]
    InvalidSignature { p: usize, q: usize, eps: i8 },
    #[error("product is not proportional to the target map: {0}")]
    NotProportional(String),
    #[error("target map is zero, scalar undefined")]
    ZeroTarget,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("operation requires eps = +1")]
    WrongSign,
    #[error("commutant dimension did not stabilise: {first} with the first batch, {second} after doubling")]
    StabilityFailure { first: usize, second: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
