use thiserror::Error;

/// Errors surfaced by every computation in the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WorkbenchError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("too large: {what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: u128,
        limit: u128,
    },
    #[error("operation requires a loopless matroid; loops at {0:?}")]
    LooplessRequired(Vec<usize>),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T, E = WorkbenchError> = std::result::Result<T, E>;

impl WorkbenchError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        WorkbenchError::InvalidInput(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        WorkbenchError::InternalInvariantViolation(msg.into())
    }

    pub(crate) fn too_large(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        WorkbenchError::TooLarge {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }
}
