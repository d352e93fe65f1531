use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Verification` is reserved for invariant assertions that are expected to
/// hold by construction (a failed check means a bug or bad data, and maps to
/// exit code 2 in the CLI). Everything else maps to exit code 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("duplicate points in cloud (indices {0} and {1})")]
    DuplicatePoints(usize, usize),

    #[error("point set has fewer points than required: need {need}, have {have}")]
    TooFewPoints { need: usize, have: usize },

    #[error("exact oracle is capped at 16 points (got {0}); use the approximation engine")]
    OracleTooLarge(usize),

    #[error("cap packing of size {got} is below the guaranteed bound {need} (parameter mistake?)")]
    PackingTooSmall { got: usize, need: usize },

    #[error("shared x-coordinate between points {0} and {1}; deep-below test needs distinct x")]
    SharedXCoordinate(usize, usize),

    #[error("invalid config key `{0}`")]
    ConfigKey(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
