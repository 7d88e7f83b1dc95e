//! Error type shared across the library.

use thiserror::Error;

/// Errors raised by library operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the operation's arguments was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// The operation would exceed a configured resource cap.
    #[error("refused: {0}")]
    Refusal(String),
    /// An iterative method exhausted its budget without an answer.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// Malformed textual input, with a position diagnostic.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn refusal(msg: impl Into<String>) -> Self {
        Error::Refusal(msg.into())
    }

    pub fn inconclusive(msg: impl Into<String>) -> Self {
        Error::Inconclusive(msg.into())
    }

    pub fn parse(line: usize, column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
