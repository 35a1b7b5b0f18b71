//! Error type shared by all workbench modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A line of an input file could not be decoded. Carries the 1-based
    /// line number so the offending record can be located.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Structurally valid input that violates a documented contract
    /// (label out of range, empty sentence, bad configuration, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Rows of two artifacts that must describe the same examples do not
    /// line up (missing/duplicate ids, length or split mismatch).
    #[error("alignment error: {0}")]
    Alignment(String),

    /// A correlation was requested for a sample on which it is undefined
    /// (zero variance, all ranks tied).
    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn validation(message: impl Into<String>) -> Self {
        Error::Validation(message.into())
    }

    pub(crate) fn alignment(message: impl Into<String>) -> Self {
        Error::Alignment(message.into())
    }
}
