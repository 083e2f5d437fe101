use thiserror::Error;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum ExitStatus {
    Success = 0,
    Failure = 1,
    Usage = 2,
    CapExceeded = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    CapExceeded(String),

    /// A cross-check disagreed or an internal invariant broke.
    #[error("{0}")]
    Failed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) => ExitStatus::Usage,
            CliError::CapExceeded(_) => ExitStatus::CapExceeded,
            CliError::Failed(_) | CliError::Io(_) => ExitStatus::Failure,
        }
    }
}

impl From<emdpoly::Error> for CliError {
    fn from(e: emdpoly::Error) -> Self {
        use emdpoly::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            E::DivisionByZero | E::InvalidPair(_) | E::InvalidArgument(_) | E::ZeroPolynomial => {
                CliError::Usage(e.to_string())
            }
            E::NotDivisible(_) | E::Disconnected => CliError::Failed(e.to_string()),
        }
    }
}
