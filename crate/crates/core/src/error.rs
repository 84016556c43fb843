use crate::Label;

/// Errors shared by all library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("negative value `{0}`")]
    NegativeValue(String),
    #[error("operation requires a nonempty sequence")]
    EmptySequence,
    #[error("no entry with label {0}")]
    UnknownLabel(Label),
    #[error("labels must be distinct, both are {0}")]
    SameLabel(Label),
    #[error("entry {0} already has value 0")]
    ZeroValue(Label),
    #[error("maximum value {max} must stay below the sequence length {len}")]
    MaxValueTooLarge { max: usize, len: usize },
    #[error("laying off needs {needed} other entries, only {available} available")]
    NotEnoughEntries { needed: usize, available: usize },
    #[error("extension target {target} must exceed the current maximum {max}")]
    ExtendTargetTooSmall { target: usize, max: usize },
    #[error("index {index} outside the admissible range [{lo}..{hi}]")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("sequence is not graphic")]
    NotGraphic,
    #[error("graph is not a realization of the sequence")]
    NotARealization,
    #[error("no degree-preserving rotation pair exists")]
    NoRotationPair,
    #[error("vertex {0} outside the graph")]
    VertexOutOfRange(usize),
    #[error("exhaustive search is capped at {cap} vertices, got {got}")]
    OracleTooLarge { got: usize, cap: usize },
    #[error("sequence generation is capped at length {cap}, got {got}")]
    UniverseTooLarge { got: usize, cap: usize },
    #[error("unknown method `{0}`")]
    UnknownMethod(String),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
