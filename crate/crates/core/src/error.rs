use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SrgError {
    #[error("invalid parameters ({v},{k},{lambda},{mu}): {reason}")]
    InvalidParams {
        v: u64,
        k: u64,
        lambda: u64,
        mu: u64,
        reason: &'static str,
    },
    #[error("counting identity k(k-lambda-1) = (v-k-1)mu fails for ({v},{k},{lambda},{mu})")]
    IdentityViolated { v: u64, k: u64, lambda: u64, mu: u64 },
    #[error("spectrum is not integral: {0}")]
    NotApplicable(String),
    #[error("unsupported Gegenbauer configuration: {0}")]
    Gegenbauer(String),
    #[error("split size w={w} out of range for lambda={lambda}")]
    SplitOutOfRange { w: u64, lambda: u64 },
    #[error("numeric overflow: {0}")]
    Overflow(&'static str),
    #[error("oracle: {0}")]
    Oracle(String),
}

pub type Result<T, E = SrgError> = std::result::Result<T, E>;
