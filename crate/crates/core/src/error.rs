use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("invalid generator degree for `{name}`: {degree}")]
    InvalidDegree { name: String, degree: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("line {line}: {message}")]
    ParseAt { line: usize, message: String },

    #[error("not a cocycle; its differential is {differential}")]
    NotCocycle { differential: String },

    #[error("not a KS extension over the given fiber: {0}")]
    NotKsExtension(String),

    #[error("differential does not square to zero: {0}")]
    DifferentialSquare(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not of the required shape: {0}")]
    Shape(String),

    #[error("slice of dimension {dim} in degree {degree} exceeds the limit {limit}")]
    Resource { degree: u32, dim: usize, limit: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
