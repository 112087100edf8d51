//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeltaError {
    /// An area word that does not start at 0 or jumps by more than one.
    #[error("malformed area word: {0}")]
    MalformedAreaWord(String),

    /// A barred-alphabet word that is not the area word of a reduced polyomino.
    #[error("malformed polyomino: {0}")]
    MalformedPolyomino(String),

    /// A decoration set that violates its feature constraints.
    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),

    /// A labelling that violates the column or first-column constraints.
    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    /// An operation applied to an object of the wrong flavor.
    #[error("flavor mismatch: expected {expected}, found {found}")]
    FlavorMismatch { expected: String, found: String },

    /// The reading-word labelling constraints cannot be met.
    #[error("no valid labelling: {0}")]
    NoValidLabelling(String),

    /// An inverse map was given an object outside the image of the forward map.
    #[error("not in image: {0}")]
    NotInImage(String),

    /// A recursion index outside the admissible domain.
    #[error("index outside the admissible domain: {0}")]
    DomainError(String),

    /// The memo table reached the configured entry cap.
    #[error("memo table limit of {limit} entries exceeded")]
    MemoLimitExceeded { limit: usize },

    /// Malformed JSON input.
    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, DeltaError>;

impl From<serde_json::Error> for DeltaError {
    fn from(err: serde_json::Error) -> Self {
        DeltaError::Json(err.to_string())
    }
}
