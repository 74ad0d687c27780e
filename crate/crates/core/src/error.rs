use thiserror::Error;

/// Failure modes shared by every engine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Input(String),
    /// The operation needs data the input does not carry
    /// (for example a composition table).
    #[error("missing capability: {0}")]
    Capability(String),
    /// A configured size or work cap was exceeded.
    #[error("computation limit exceeded: {0}")]
    Limit(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn limit(msg: impl Into<String>) -> Self {
        Error::Limit(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
