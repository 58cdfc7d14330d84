use std::fmt;

/// Errors raised when an operation is asked to leave its domain, plus the
/// hard-failure case of an exhaustive scan finding a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division by zero.
    DivisionByZero,
    /// Input violates an operation's precondition.
    Domain(String),
    /// An asserted bound failed its exact certification; carries a witness.
    BoundViolation(String),
    /// Command-line arguments that parse but make no sense together.
    Usage(String),
    /// Output could not be written.
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BoundViolation(msg) => write!(f, "bound violation: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
