use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("not a partial order: relations contain a cycle through p{0}")]
    NotPartialOrder(usize),

    #[error("label {label} out of range 1..={d}")]
    LabelOutOfRange { label: usize, d: usize },

    #[error("size mismatch: {left} vs {right} elements")]
    SizeMismatch { left: usize, right: usize },

    #[error("capacity exceeded: {what} ({value} > {limit})")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("points span dimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("inequality system is unbounded")]
    Unbounded,

    #[error("origin is not in the interior")]
    OriginNotInterior,

    #[error("inconsistent dimensions: {0}")]
    Shape(String),

    #[error("malformed rational {0:?}")]
    Rational(String),

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, value: usize, limit: usize) -> Self {
        Error::Capacity { what, value, limit }
    }

    /// True for errors caused by exceeding a size bound rather than bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
