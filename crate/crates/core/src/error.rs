use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `column` is 1-based.
    #[error("parse error at column {column} in {input:?}: {reason}")]
    Parse {
        input: String,
        column: usize,
        reason: String,
    },

    #[error("invalid level e = {0}: the level must be at least 2")]
    InvalidLevel(i64),

    #[error("node component {component} is out of range for a charge of length {len}")]
    InvalidNode { component: usize, len: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(i64, i64),

    #[error("charges {from} and {to} are not in the same orbit")]
    OrbitMismatch { from: String, to: String },

    #[error("{mp} is not an Uglov multipartition for charge {charge} at level {e}")]
    NotUglov { mp: String, charge: String, e: i64 },

    #[error("replay stopped at step {step}: no good addable {residue}-node")]
    UndefinedStep { step: usize, residue: i64 },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("divisibility: {0}")]
    Divisibility(String),
}

pub type Result<T> = std::result::Result<T, Error>;
