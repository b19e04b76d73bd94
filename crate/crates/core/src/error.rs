use alloc::string::String;

/// Errors raised by constructors and operations.
///
/// Axiom failures are not errors: they are itemized in a
/// [`ValidationReport`](crate::ValidationReport). An error means the input
/// could not be interpreted at all, or an operation's precondition failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A token is empty or contains whitespace, `:` or `,`.
    #[error("invalid identifier {0:?}")]
    InvalidIdentifier(String),
    /// A table references an undeclared identifier, a required entry is
    /// missing, or an entry is present where none is allowed.
    #[error("malformed presentation: {0}")]
    MalformedPresentation(String),
    #[error("unknown {sort} {token:?}")]
    UnknownIdentifier { sort: &'static str, token: String },
    /// The input is well formed but fails validation, or violates a
    /// documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("square {square:?} has vertical length {length:?}, not 1")]
    NotLengthOne { square: String, length: Option<usize> },
    #[error("image {image:?} of square {square:?} lies outside the globularily generated piece")]
    ImageEscape { square: String, image: String },
    #[error("level {level} out of range 1..={stable_at}")]
    LevelOutOfRange { level: usize, stable_at: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("middle components do not match: {0}")]
    MiddleMismatch(String),
    #[error("inconsistent tagging: {0}")]
    InconsistentTagging(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedPresentation(msg.into())
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
