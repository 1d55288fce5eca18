use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unsupported or malformed root system request.
    #[error("configuration error: {0}")]
    Config(String),
    /// An enumeration would exceed a configured bound.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Invalid input to an operation.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An internal consistency check failed. This indicates a bug, never bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
