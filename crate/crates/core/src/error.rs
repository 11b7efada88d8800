use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("edge #{index}: {reason}")]
    InvalidEdge { index: usize, reason: String },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph has {n} vertices, exhaustive search supports at most {max}")]
    TooLarge { n: usize, max: usize },

    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),

    #[error("unknown fixture {0:?} (expected fig1 or fig2)")]
    UnknownFixture(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
