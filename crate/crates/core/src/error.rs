use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the problem.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// An argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The input exceeds an implemented or configured size bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A construction whose result would depend on an arbitrary choice.
    #[error("ill-defined construction: {0}")]
    IllDefined(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }

    pub(crate) fn capacity(message: impl Into<String>) -> Self {
        Error::Capacity(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
