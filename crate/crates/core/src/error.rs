use thiserror::Error;

/// Errors reported by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("flavor mismatch: {left} vs {right}")]
    FlavorMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("zero assigned to inverted parameter `{0}`")]
    ZeroSpecialization(String),

    #[error("missing value for parameter `{0}`")]
    MissingParameter(String),

    #[error("characteristic 2 does not support {0}")]
    CharacteristicTwo(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("quadratic data failed compatibility: {0}")]
    Incompatible(String),

    #[error("base ring {0} is not a division ring")]
    NotDivisionRing(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("reduction incomplete: {0}")]
    Incomplete(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown symbol `{0}` in this context")]
    UnknownSymbol(String),
}

pub type Result<T> = std::result::Result<T, Error>;
