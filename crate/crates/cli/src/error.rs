use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ramsey_forge::Error),

    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: std::io::Error },

    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: std::io::Error },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit status: 2 input, 3 capacity, 4 spec-validity alarm.
    pub fn exit_code(&self) -> i32 {
        use ramsey_forge::Error as E;
        match self {
            CliError::Core(E::Capacity(_) | E::CatalogCapacity { .. }) => 3,
            CliError::Core(E::Alarm(_)) => 4,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
