//! Error type shared across the library.

use crate::rules::RegimeLabel;
use thiserror::Error;

/// Everything that can go wrong when building model objects or solving policies.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A field violated its domain restriction; `name` identifies the offender.
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// A requested grid or sweep range is empty, degenerate, or not finite.
    #[error("invalid range: {message}")]
    InvalidRange { message: String },

    /// Simulation was asked for a regime without a bounded forward solution.
    #[error("unsupported regime {label}: {message}")]
    UnsupportedRegime { label: RegimeLabel, message: String },

    /// Value iteration exhausted its iteration budget or diverged outright.
    #[error(
        "value iteration did not converge after {iterations} iterations \
         (last iterate {last:e}, residual {residual:e})"
    )]
    NoConvergence {
        iterations: u64,
        last: f64,
        residual: f64,
    },

    /// The closed-form solution and the value-iteration oracle disagree.
    #[error("oracle cross-check failed: {message}")]
    CrossCheck { message: String },

    /// Initial inflation must sit on the optimality anchor when inflation is costly.
    #[error("anchor violation: {message}")]
    AnchorViolation { message: String },
}

impl Error {
    /// Shorthand for an [`Error::InvalidParameter`] with a formatted message.
    pub(crate) fn invalid(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }

    /// Shorthand for an [`Error::InvalidRange`] with a formatted message.
    pub(crate) fn range(message: impl Into<String>) -> Self {
        Error::InvalidRange {
            message: message.into(),
        }
    }
}
