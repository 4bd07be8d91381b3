use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed cycle notation {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: u64, degree: usize },

    #[error("point {0} appears more than once")]
    RepeatedPoint(u32),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0}")]
    NotSubgroup(String),

    #[error("{0}")]
    NotNormal(String),

    #[error("subgroup is not maximal: {0}")]
    NotMaximal(String),

    #[error("operation requires a non-trivial group")]
    TrivialGroup,

    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded { what: &'static str, limit: u128, actual: u128 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("validation failed for {id}: {reason}")]
    Validation { id: String, reason: String },

    #[error("{0}")]
    Io(String),

    #[error("internal consistency check failed: {0}")]
    Engine(String),
}

impl Error {
    pub fn is_bound(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
