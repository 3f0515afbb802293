use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorrError {
    #[error("unknown function name `{0}`")]
    UnknownFunction(String),

    #[error("dimension must be at least 1")]
    ZeroDim,

    #[error("{what} must be positive, got {got}")]
    NonPositive { what: &'static str, got: f64 },

    #[error("point has norm {norm} outside the domain ball of radius {radius}")]
    OutOfDomain { norm: f64, radius: f64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("sample set is empty")]
    EmptySamples,

    #[error("surrogate is not convex: theta1[{index}] = {value} < 0")]
    NonConvex { index: usize, value: f64 },

    #[error("{what} failed to converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CorrError>;
