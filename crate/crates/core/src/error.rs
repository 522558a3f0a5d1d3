//! Crate-wide error type.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Malformed cube/checkpoint headers or payload size mismatches.
    #[error("format error: {0}")]
    Format(String),

    /// Dimension or channel disagreement between operands.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Precondition violations on arguments (bad scale, out-of-range index, ...).
    #[error("invalid argument: {0}")]
    InvalidArg(String),

    /// NaN/Inf where finite values are required.
    #[error("numeric error: {0}")]
    Numeric(String),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
