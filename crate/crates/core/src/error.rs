use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{value} is outside the prime table (limit {limit})")]
    OutOfRange { value: u64, limit: u64 },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("m = {m} exceeds the small-interval capacity {capacity}")]
    CapacityExceeded { m: u64, capacity: u64 },

    #[error("k = {k} is not one of the certified values 1, 2, 3, 5, 9, 14; supply a proven bound")]
    NotCertified { k: u64 },

    #[error("certification failed for k = {k}: ({lo}, {hi}) contains no prime")]
    CertificationFailed { k: u64, lo: u64, hi: u64 },

    #[error("bound violated: {0}")]
    BoundViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
