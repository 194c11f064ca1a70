//! Crate-wide error type with a stable mapping to process exit codes.

use thiserror::Error;

/// Everything that can go wrong across the library and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input data: files, records, graphs, ids.
    #[error("{0}")]
    Data(String),

    /// Numeric failure: domain violations, non-finite values, divergence.
    #[error("{0}")]
    Numeric(String),

    /// Bad command-line usage (unknown subcommand, missing flag).
    #[error("{0}")]
    Usage(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl Error {
    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Exit code the CLI reports for this error.
    /// 0 is success, 1 usage, 2 data, 3 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::Data(_) | Error::Io { .. } => 2,
            Error::Numeric(_) => 3,
        }
    }
}
