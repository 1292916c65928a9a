use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GapError {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// A quantity that is not defined for the given input (e.g. the
    /// separation of a constant function).
    #[error("undefined: {0}")]
    Undefined(String),
    /// A finite-resolution computation cannot produce an exact answer at
    /// the requested depth.
    #[error("resolution error: {0}")]
    Resolution(String),
}

pub type Result<T> = std::result::Result<T, GapError>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(GapError::Input(msg.into()))
}
