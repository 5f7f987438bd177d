use thiserror::Error;

/// Errors produced by validation and queries across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An input parameter failed validation. `field` names the offending
    /// parameter so callers (notably the CLI) can report it directly.
    #[error("invalid {field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    /// A block id that does not exist in the tree was queried.
    #[error("unknown block id {0}")]
    UnknownBlock(usize),

    /// A score-constant list does not match the number of block types.
    #[error("expected {expected} score constants, got {got}")]
    ScoreCountMismatch { expected: usize, got: usize },

    /// A line in a textual arrival trace could not be parsed.
    #[error("trace line {line}: {reason}")]
    TraceFormat { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
