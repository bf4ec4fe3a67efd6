use thiserror::Error;

/// Failure modes shared by every decision procedure in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument violates the operation's precondition (zero scale, zero input, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The input lies outside the class of algebras the procedure handles
    /// (constant defining polynomial, q a root of unity, ...).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A hypothesis of the criterion fails, so it does not apply.
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    /// An operation needs arithmetic the chosen representation cannot express.
    #[error("structural: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}

pub(crate) fn unsupported<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Unsupported(msg.into()))
}

pub(crate) fn inapplicable<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inapplicable(msg.into()))
}
