use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid election: {0}")]
    InvalidElection(String),

    #[error("invalid misrepresentation data: {0}")]
    InvalidMisrep(String),

    #[error("monotonicity violated for voter {voter}: candidate {better} is ranked above {worse} but has a larger value")]
    NotMonotone {
        voter: usize,
        better: usize,
        worse: usize,
    },

    #[error("invalid committee size k={k} (m={m}, n={n})")]
    InvalidK { k: usize, m: usize, n: usize },

    #[error("malformed solution: {0}")]
    MalformedSolution(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("budget exhausted: {0}")]
    Budget(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
