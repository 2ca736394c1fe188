use thiserror::Error;

/// Errors raised by the scoring and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed record: {reason}")]
    MalformedRecord { line: usize, reason: String },

    #[error("document `{id}` is empty after tokenization")]
    EmptyDocument { id: String },

    #[error("duplicate document id `{id}`")]
    DuplicateId { id: String },

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("query must contain at least one term")]
    EmptyQuery,

    #[error("query matches nothing")]
    QueryMatchesNothing,

    #[error("series too short: {estimator} needs at least {required} values, got {actual}")]
    SeriesTooShort {
        estimator: &'static str,
        required: usize,
        actual: usize,
    },

    #[error("{estimator}: zero fluctuation (constant series)")]
    ZeroFluctuation { estimator: &'static str },

    #[error("{estimator}: degenerate series (zero standard deviation)")]
    DegenerateSeries { estimator: &'static str },

    #[error("empty window grid")]
    EmptyWindowGrid,

    #[error("window {window} outside the admissible range [{min}, {max}]")]
    WindowOutOfRange { window: usize, min: usize, max: usize },

    #[error("insufficient scaling range: {usable} usable window(s), need at least {required}")]
    InsufficientScalingRange { usable: usize, required: usize },

    #[error("nonpositive value {value} at rank {rank} inside the fitted range")]
    NonPositiveValue { rank: usize, value: f64 },

    #[error("value {value} at position {index} lies outside [0, 1]")]
    OutOfUnitInterval { index: usize, value: f64 },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("circulant embedding has negative eigenvalue {value} at index {index}")]
    NegativeEigenvalue { index: usize, value: f64 },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
