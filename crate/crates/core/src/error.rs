use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto three broad classes used by the command line
/// front end: precondition failures, resource exhaustion, and internal
/// invariant violations.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation, e.g. the zero
    /// vector passed to `rho`.
    #[error("domain error: {0}")]
    Domain(String),

    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The request exceeds the configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Malformed textual input (coordinates, rules, target files).
    #[error("parse error: {0}")]
    Parse(String),

    /// The certified floor could not be resolved within the precision cap.
    #[error("factorial floor unresolved for m = {m} after {bits} bits")]
    Unresolved { m: u64, bits: u64 },

    /// A property the construction guarantees did not hold. Indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Coarse classification of an [`Error`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Precondition,
    Resource,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Domain(_) | Error::Precondition(_) | Error::Parse(_) => ErrorClass::Precondition,
            // a missing or unreadable input file is the caller's to fix
            Error::Json(_) | Error::Csv(_) | Error::Io(_) => ErrorClass::Precondition,
            Error::Resource(_) | Error::Unresolved { .. } => ErrorClass::Resource,
            Error::Invariant(_) => ErrorClass::Internal,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
