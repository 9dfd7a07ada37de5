use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge list contains no edges")]
    EmptyInput,

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("two-colour calibration failed: {0}")]
    Calibration(String),

    #[error(
        "exact enumeration needs {subsets} subsets (limit {limit}); use Monte-Carlo sampling instead"
    )]
    EnumerationTooLarge { subsets: u128, limit: u64 },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::Parameter(message.into())
    }

    /// Whether the error stems from the input data rather than from how the
    /// caller configured the run.
    pub fn is_data_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyInput
                | Error::EnumerationTooLarge { .. }
                | Error::Io(_)
                | Error::Csv(_)
                | Error::Json(_)
        )
    }
}
