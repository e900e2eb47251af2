use thiserror::Error;

/// Errors surfaced by the verification library.
///
/// `Contract` marks a violated precondition (caller bug), `Domain` an input
/// outside the mathematical domain of an operation, and `Numerical` an
/// internal certificate failure (e.g. a determinant dropping below a proven
/// lower bound), which indicates a formula regression rather than bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("numerical certificate failed: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
