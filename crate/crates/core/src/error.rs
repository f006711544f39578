use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("undefined height: zero polynomial")]
    UndefinedHeight,
    #[error("mismatched scales: {0} vs {1}")]
    ScaleMismatch(usize, usize),
    #[error("precision below separation bound: scale {scale}, need more than {needed}")]
    PrecisionBelowSeparation { scale: usize, needed: usize },
    #[error("invalid decimal literal {0:?}")]
    BadDecimal(String),
    #[error("invalid triangulation: {0}")]
    BadTriangulation(String),
    #[error("edge {0} is unflippable")]
    Unflippable(usize),
    #[error("vector has length {got}, expected {expected}")]
    WrongLength { got: usize, expected: usize },
    #[error("non-integer multiarc entry {0}")]
    NonInteger(String),
    #[error("unknown surface {name:?}; available presets: {available}")]
    UnknownSurface { name: String, available: String },
    #[error("unknown generator {letter:?} for surface {surface}; alphabet: {alphabet}")]
    UnknownLetter { letter: char, surface: String, alphabet: String },
    #[error("paths do not compose: end of first path differs from start of second")]
    CompositionMismatch,
    #[error("invalid move: {0}")]
    BadMove(String),
    #[error("not a measured lamination: {0}")]
    NotLamination(String),
    #[error("not splittable: {0}")]
    NotSplittable(String),
    #[error("not carried / invalid state: {0}")]
    InvalidTrack(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("wrong Nielsen-Thurston type: {0}")]
    WrongType(String),
    #[error("periodicity not found: {0}")]
    PeriodicityNotFound(String),
    #[error("{0}")]
    Algebra(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
