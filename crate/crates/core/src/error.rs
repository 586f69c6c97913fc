use thiserror::Error;

/// Errors raised by the enumeration and counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("pinnacle {value} appears more than once")]
    DuplicatePinnacle { value: usize },

    #[error("pinnacle {value} is outside [1, {n}]")]
    PinnacleOutOfRange { value: usize, n: usize },

    #[error("ambient size must be at least 1")]
    EmptyAmbient,

    #[error("segment level {level} is outside [2, {max}]")]
    LevelOutOfRange { level: usize, max: usize },

    #[error("lattice path dips below the axis at step {step}")]
    BelowAxis { step: usize },

    #[error("lattice path is not a {expected} path")]
    WrongPathClass { expected: &'static str },

    #[error("{what}: expected {expected}, found {found}")]
    SizeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{what} = {value} exceeds the enumeration guard {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("pinnacle set {pinnacles:?} is not admissible")]
    Inadmissible { pinnacles: Vec<usize> },

    #[error("operation requires a nonempty pinnacle set")]
    EmptyPinnacleSet,

    #[error("invalid choice at step {step}: {reason}")]
    InvalidChoice { step: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
