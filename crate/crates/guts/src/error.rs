//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in this library.
#[derive(Debug, Error)]
pub enum Error {
    /// Caller-supplied data violated a precondition (bad probability,
    /// empty matrix, ragged rows, out-of-range index, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// The request is well-formed but outside what the engine can do
    /// (e.g. exact mixed-profile payoffs for heterogeneous opponents
    /// beyond the quadrature limit).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An iterative routine hit its budget without meeting tolerance.
    #[error("no convergence after {steps} steps (residual {residual:e})")]
    NoConvergence { steps: usize, residual: f64 },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::input(msg)
}

pub(crate) fn unsupported(msg: impl Into<String>) -> Error {
    Error::unsupported(msg)
}

pub type Result<T> = std::result::Result<T, Error>;
