use std::fmt;

/// Library error type.
///
/// `Domain` is a malformed input (violated precondition); `Resource` is a
/// configured cap being exceeded. A vanishing crystal operator is `None`,
/// never an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Domain(String),
    Resource(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Resource(m) => write!(f, "resource error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
