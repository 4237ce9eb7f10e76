use thiserror::Error;

/// Exit status for successful runs.
pub const EXIT_OK: i32 = 0;
/// Exit status when `check` finds a failing property.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for rejected input: bad files, flags or parameters.
pub const EXIT_REJECTED: i32 = 2;
/// Exit status for I/O failures and numerical breakdowns.
pub const EXIT_RUNTIME: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{field}: {source}")]
    Rejected {
        field: String,
        source: wigfree_core::Error,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Numerical(wigfree_core::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        Self::Input(msg.into())
    }

    pub fn rejected(field: String, source: wigfree_core::Error) -> Self {
        Self::Rejected { field, source }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Self::Io {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) | Self::Rejected { .. } => EXIT_REJECTED,
            Self::Io { .. } | Self::Numerical(_) => EXIT_RUNTIME,
        }
    }
}

impl From<wigfree_core::Error> for CliError {
    /// Parameter errors count as rejected input, the rest as runtime failures.
    fn from(e: wigfree_core::Error) -> Self {
        use wigfree_core::Error as E;
        match e {
            E::DegreeCapExceeded { .. }
            | E::FractionalPowerUnsupported { .. }
            | E::InvalidParameter { .. }
            | E::EmptyWavefunction => Self::Rejected {
                field: "input".into(),
                source: e,
            },
            E::ParameterMismatch | E::RealnessViolation { .. } | E::NoConvergence { .. } => {
                Self::Numerical(e)
            }
        }
    }
}
