//! Command-line front end: configuration parsing, command dispatch, and
//! CSV/JSON rendering for the policy-mix library.

pub mod config;
pub mod output;
pub mod run;

pub use config::{parse_config, Command, ConfigDraft, OutputFormat, Policy, RunConfig};
pub use output::{render, Cell, Table};
pub use run::{execute, Rendered, OUTPUT_DIR_VAR};

/// Front-end error, carrying the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed configuration or flags.
    #[error("{0}")]
    Usage(String),
    /// Rejected by the core library.
    #[error(transparent)]
    Core(#[from] policymix::Error),
    /// Reading or writing files failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    /// Process exit code: 2 invalid configuration or parameters, 3 unsupported
    /// regime, 4 failed oracle cross-check or non-convergence, 1 i/o trouble.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(error) => match error {
                policymix::Error::UnsupportedRegime { .. } => 3,
                policymix::Error::CrossCheck { .. } | policymix::Error::NoConvergence { .. } => 4,
                _ => 2,
            },
            CliError::Io(_) => 1,
        }
    }
}
