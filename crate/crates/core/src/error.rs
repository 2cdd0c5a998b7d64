use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {0} is outside the supported range {1}")]
    InvalidRank(usize, &'static str),

    #[error("generator {letter} is not valid in rank {rank}")]
    InvalidLetter { letter: String, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A precondition on the argument does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    /// The weight function lies outside the region where the construction is defined.
    #[error("weight regime error: {0}")]
    Regime(String),

    /// An identity that must hold by construction failed.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
