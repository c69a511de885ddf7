use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("resultant of zero polynomial undefined")]
    ZeroResultant,
    #[error("torus link, not a knot")]
    TorusLink,
    #[error("not a knot Seifert matrix: {0}")]
    NotKnot(String),
    #[error("matrix is not hermitian")]
    NotHermitian,
    #[error("parity obstruction: Arf nonzero")]
    ParityObstruction,
    #[error("top-left block is not Alexander trivial")]
    NotAlexanderTrivial,
    #[error("proposition hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("{0}")]
    Semantic(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
