use thiserror::Error;

/// Failures of a command, each tied to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: exit code 1.
    #[error("{0}")]
    Usage(String),
    /// A domain precondition failed or an invariant broke: exit code 2 or 3.
    #[error(transparent)]
    Domain(#[from] bsdh_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(bsdh_core::Error::InvariantViolation(_)) => 3,
            CliError::Domain(_) => 2,
        }
    }
}
