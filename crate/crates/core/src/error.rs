use thiserror::Error;

pub type Result<T, E = PermError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum PermError {
    #[error("{op}: dimension {n} exceeds the configured limit {limit}")]
    DimensionGuard {
        op: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    EmptyDimension,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("finite-difference step must be nonzero")]
    ZeroStep,

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("index {index} out of range [0, {bound})")]
    IndexOutOfRange { index: u128, bound: u128 },

    #[error("function table is not a bijection")]
    NotBijective,

    #[error("value {value} out of range for dimension {n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl PermError {
    /// True for errors caused by a dimension guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, PermError::DimensionGuard { .. })
    }
}
