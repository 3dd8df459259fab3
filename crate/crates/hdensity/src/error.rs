//! Error types shared across the library.
//!
//! Three failure classes map onto the CLI exit-code contract: invalid input
//! (exit 2), enumeration capacity exceeded (exit 3), and internal
//! inconsistencies such as a misordered place stream (a bug, not user error).

use thiserror::Error;

/// Malformed or out-of-contract input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct InputError(String);

impl InputError {
    pub fn new(msg: impl Into<String>) -> Self {
        InputError(msg.into())
    }
}

/// An enumeration or budget cap was exceeded; the message names the cap.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct CapacityError(String);

impl CapacityError {
    pub fn new(msg: impl Into<String>) -> Self {
        CapacityError(msg.into())
    }
}

/// Umbrella error for operations that can fail in more than one way.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(#[from] InputError),
    #[error("capacity error: {0}")]
    Capacity(#[from] CapacityError),
    /// Violated internal contract (e.g. a place stream out of order).
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
