use thiserror::Error;

/// Failures of a CLI command, each tied to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or out-of-range arguments (exit 2).
    #[error("usage: {0}")]
    Usage(String),
    /// Reading or writing output failed (exit 3).
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    /// CSV encoding failed (exit 3).
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    /// JSON encoding failed (exit 3).
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// A bound was exceeded or not attained (exit 1).
    #[error("verification failed: {0}")]
    Verification(String),
    /// An internal computation reported an error (exit 2).
    #[error(transparent)]
    Core(#[from] clbeta_core::Error),
}

impl CliError {
    /// Process exit code: 1 verification, 2 usage, 3 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) | CliError::Core(_) => 2,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => 3,
        }
    }
}
