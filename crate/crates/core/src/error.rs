use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A request exceeds a guardrail (vertex count, enumeration budget, ...).
    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The certified sparse graph on the base set cannot bridge the gap
    /// between two consecutive `f(S, n, k)` values at this vertex count.
    #[error("sparse pool too small: {needed} extra edges needed, {available} available")]
    InsufficientSparseEdges { needed: u128, available: u128 },

    #[error("checkpoint rejected: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn capability<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capability(msg.into()))
}
