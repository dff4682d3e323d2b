use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{kind} requires an even number of parts, got {sigma}")]
    KindParity { kind: &'static str, sigma: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid Jordan type for {kind}: {reason}")]
    InvalidJordanType { kind: &'static str, reason: String },

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("rank {rank} exceeds the configured limit {limit}")]
    RankLimit { rank: usize, limit: usize },

    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),

    #[error("degenerate type-D label {0} needs split character values")]
    DegenerateLabel(String),

    #[error("representation {0} is not in Irr(W)^dagger")]
    NotDagger(String),

    #[error("j-induction found {count} constituents with b = {b}")]
    JInductionNotUnique { count: usize, b: usize },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("field too small: {0}")]
    FieldTooSmall(String),

    #[error("polynomial division is not exact: {0}")]
    InexactDivision(String),

    #[error("missing data: {0}")]
    MissingData(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
