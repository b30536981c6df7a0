use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series is not invertible: constant term {0} has no inverse")]
    SingularSeries(String),

    #[error("composition requires a delta series, got constant term {0}")]
    NotDelta(String),

    #[error("delta series has a non-invertible linear coefficient {0}")]
    NonInvertibleDelta(String),

    #[error("{value} is not divisible by lambda^{power}")]
    Divisibility { value: String, power: usize },

    #[error("degree/order {requested} exceeds the configured maximum {max}")]
    GuardExceeded { requested: usize, max: usize },

    #[error("coefficient t^{index}/{index}! requested beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },

    #[error("lambda mode mismatch: {0}")]
    LambdaMode(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    /// True for errors that stem from caller input rather than an internal
    /// inconsistency.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Divisibility { .. })
    }
}
