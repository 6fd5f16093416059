use thiserror::Error;

/// Errors are grouped into machine-readable categories so that callers
/// (notably the CLI) can map them onto stable exit behaviour.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cap exceeded: {0}")]
    Cap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside supported span: {0}")]
    Span(String),
}

impl Error {
    pub fn category(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Cap(_) => "cap",
            Error::Precondition(_) => "precondition",
            Error::Span(_) => "span",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
