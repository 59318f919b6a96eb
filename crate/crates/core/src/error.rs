use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "tower digit {digit} at position {position} exceeds its position (need 0 <= a_j <= j)"
    )]
    DigitOutOfRange { position: usize, digit: usize },

    #[error("degree {got} is too small, need at least {needed}")]
    DegreeTooSmall { needed: usize, got: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("argument out of range: {0}")]
    ArgumentRange(String),

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("rank {rank} is outside 0..{order} for W(A_{m})")]
    RankOutOfRange { rank: usize, order: usize, m: usize },

    #[error("rank mismatch: H(A_{left}) vs H(A_{right})")]
    RankMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed element: {0}")]
    Json(String),

    #[error("{0}")]
    Bench(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
