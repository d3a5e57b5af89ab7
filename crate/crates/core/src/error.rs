use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("builder `{builder}`: {reason}")]
    Builder { builder: String, reason: String },
    #[error("no antipode: the convolution system for S is singular")]
    NoAntipode,
    #[error("antipode is not invertible")]
    NonInvertibleAntipode,
    #[error("element of the tensor square is not invertible: {0}")]
    NotInvertible(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("{op}: {source}")]
    Context {
        op: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attaches the name of the operation that failed.
    pub fn context(self, op: &'static str) -> Error {
        Error::Context {
            op,
            source: Box::new(self),
        }
    }

    /// Innermost error, with all context layers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }
}
