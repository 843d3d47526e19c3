//! One error type for the whole library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("field size {0} too large (supported: q <= 2^16)")]
    FieldTooLarge(u64),

    #[error("invalid field parameters: {0}")]
    BadField(String),

    #[error("element code {code} out of range for GF({q})")]
    BadElement { code: u64, q: u64 },

    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),

    #[error("coordinate vector has wrong length: got {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("the zero vector has no projective normalization")]
    ZeroVector(),

    #[error("instance too large: {what} = {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("projected iteration count {0:.3e} exceeds 1e10; pass the override to run anyway")]
    GuardTripped(f64),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("empty set where a nonempty one is required")]
    EmptySet,

    #[error("set size {size} exceeds the one-side limit {limit}")]
    SetTooLarge { size: u64, limit: u64 },

    #[error("certificate is malformed: {0}")]
    Malformed(String),

    #[error("numeric argument out of domain: {0}")]
    Domain(String),

    #[error("search budget exhausted: best value reached {best} < target {target}")]
    BudgetExhausted { best: u64, target: u64 },

    #[error("relaxation is infeasible for q={q}, alpha={alpha}")]
    Infeasible { q: u32, alpha: u64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
