use thiserror::Error;

/// Errors raised by state validation, subset handling and the monotone routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    NotUnitTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPsd(f64),

    #[error("dimension mismatch: matrix side {side} but product of dims is {product}")]
    DimensionMismatch { side: usize, product: usize },

    #[error("expected local dimensions {expected:?}, got {got:?}")]
    WrongDims { expected: Vec<usize>, got: Vec<usize> },

    #[error("invalid local dimension {0} (every party needs dimension >= 2)")]
    InvalidDimension(usize),

    #[error("too many parties: {0} (at most {max})", max = crate::state::MAX_PARTIES)]
    TooManyParties(usize),

    #[error("total dimension {0} exceeds the supported maximum of 65536")]
    DimensionOverflow(usize),

    #[error("party index {index} out of range for {parties} parties")]
    PartyOutOfRange { index: usize, parties: usize },

    #[error("duplicate party index {0}")]
    DuplicateParty(usize),

    #[error("subsets overlap")]
    OverlappingSubsets,

    #[error("operation needs at least {needed} parties, state has {got}")]
    TooFewParties { needed: usize, got: usize },

    #[error("subset size {got} invalid: {reason}")]
    InvalidSubsetSize { got: usize, reason: &'static str },

    #[error("rank {rank} out of range for dimension {dim}")]
    RankOutOfRange { rank: usize, dim: usize },

    #[error("negative triangle side {0}")]
    NegativeSide(f64),

    #[error("ensemble invalid: {0}")]
    InvalidEnsemble(String),

    #[error("invalid state spec: {0}")]
    InvalidSpec(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
