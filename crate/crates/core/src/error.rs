use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation {text:?}: {reason}")]
    CycleSyntax { text: String, reason: String },

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("empty generating set")]
    EmptyGenerators,

    #[error("element set not closed under conjugation: {a} * {b} is missing")]
    NotConjugationClosed { a: String, b: String },

    #[error("invalid quandle: {0}")]
    InvalidQuandle(String),

    #[error("quandle would have {size} elements, limit is {limit}")]
    QuandleTooLarge { size: usize, limit: usize },

    #[error("unknown quandle spec {0:?}")]
    QuandleSpec(String),

    #[error("element {0:?} is not in the quandle")]
    UnknownElement(String),

    #[error("element index {index} out of range for quandle of size {size}")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("malformed signed Gauss code: {0}")]
    GaussCode(String),

    #[error("coloring does not match diagram: {0}")]
    ColoringMismatch(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
