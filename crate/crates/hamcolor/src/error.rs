use hamcolor_core::detour::DetourError;
use hamcolor_core::oracle::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input, or bad arguments.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    NotBlockGraph(String),
    #[error("{0}")]
    SizeGuard(#[from] OracleError),
    /// The requested coloring could not be produced or is invalid.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
            CliError::NotBlockGraph(_) => 3,
            CliError::SizeGuard(_) => 4,
        }
    }

    pub(crate) fn input(context: impl std::fmt::Display, err: impl std::fmt::Display) -> Self {
        CliError::Input(format!("{context}: {err}"))
    }
}

impl From<DetourError> for CliError {
    fn from(err: DetourError) -> Self {
        CliError::NotBlockGraph(err.to_string())
    }
}
