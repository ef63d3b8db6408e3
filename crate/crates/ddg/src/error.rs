//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the generator, its dynamics, and the evaluation harness.
#[derive(Debug, Error)]
pub enum Error {
    /// An internal model invariant was violated: shape mismatch, non-finite
    /// value, non-triangular angle matrix, and the like.
    #[error("model violation: {0}")]
    ModelViolation(String),

    /// A configuration value failed validation. `path` names the offending
    /// field, `constraint` states what it must satisfy.
    #[error("config error at `{path}`: {constraint}")]
    Config { path: String, constraint: String },

    /// Scenario text could not be parsed at all.
    #[error("config syntax error: {0}")]
    ConfigSyntax(String),

    /// A clustering solution was built for a different dimensionality than
    /// the window it is being scored against. Distinct from a model violation
    /// so harnesses can trigger algorithm repair instead of aborting.
    #[error("stale solution: built for {solution_dims} dims, window has {window_dims}")]
    StaleSolution {
        solution_dims: usize,
        window_dims: usize,
    },

    /// The requested export is not available for the current state.
    #[error("unsupported export: {0}")]
    UnsupportedExport(String),

    /// The run has consumed its whole tick budget.
    #[error("run complete: tick budget of {t_max} exhausted")]
    RunComplete { t_max: u64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(path: impl Into<String>, constraint: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            constraint: constraint.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
