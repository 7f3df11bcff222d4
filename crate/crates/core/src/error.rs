use thiserror::Error;

/// Errors raised by the partition, tableau, and counting operations.
///
/// Row indices in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("({from}) does not dominate ({to})")]
    NotComparable { from: String, to: String },

    #[error("not a partition: {0} is not weakly decreasing")]
    NotPartition(String),

    #[error("inner partition ({inner}) is not contained in outer partition ({outer})")]
    NotContained { outer: String, inner: String },

    #[error("invalid cover move {mv} for ({partition})")]
    InvalidMove { mv: String, partition: String },

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("decomposition undefined: {0}")]
    SplitUndefined(&'static str),

    #[error("adjacent transfer needs part {i} ({hi}) > part {next} ({lo})", next = .i + 1)]
    TransferPrecondition { i: usize, hi: usize, lo: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
