use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Shapes that do not fit together, e.g. exponent vectors of different length.
    #[error("structural error: {0}")]
    Structural(String),
    /// Values outside an operation's domain, e.g. a zero generator.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("engine limit exceeded: {0}")]
    Limit(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A labeled S-polynomial whose two module terms coincide.
    #[error("signature collision: {0}")]
    SignatureCollision(String),
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
