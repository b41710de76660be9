//! Error taxonomy shared by every module of the crate.

use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Invalid run or solver configuration (bad element count, step count, ...).
    #[error("configuration: {0}")]
    Config(String),

    /// Input outside the mathematical domain of an operation.
    #[error("domain: {0}")]
    Domain(String),

    /// A numerical procedure failed to converge or produced non-finite data.
    #[error("numerical failure at k = {k}: {message}")]
    Numerical { k: f64, message: String },

    /// Mode tracking across the deformation sweep broke down.
    #[error("mode tracking at epsilon = {epsilon}: {message}")]
    Tracking { epsilon: f64, message: String },

    /// The gap minimum sits on a sweep endpoint, so the crossing center is
    /// not bracketed by the sampled interval.
    #[error("gap minimum at sweep boundary (epsilon = {epsilon}): crossing center not bracketed")]
    GapAtBoundary { epsilon: f64 },

    /// Filesystem failure, annotated with the offending path.
    #[error("i/o on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Structured-text parse failure with position information.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
