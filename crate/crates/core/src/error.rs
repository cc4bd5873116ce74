use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: bad vertex ids, unparsable files, oversize ground sets.
    #[error("invalid input: {0}")]
    Input(String),
    /// The operation is undefined for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured size limit would be exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
