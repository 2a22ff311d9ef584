use thiserror::Error;

use crate::polyring::{Domain, VarId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient domain mismatch: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("operation requires domain {expected}, found {found}")]
    WrongDomain { expected: String, found: Domain },

    #[error("binomial({m}, {alpha}) is undefined: alpha exceeds m")]
    BinomialDomain { m: u64, alpha: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("variable {0} has no image")]
    UnmappedVariable(VarId),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("index {index} out of range for {what}")]
    IndexOutOfRange { what: String, index: u64 },

    #[error("bridge sizes must be positive, got ({a}, {b})")]
    InvalidBridge { a: u32, b: u32 },

    #[error("evaluation budget exceeded: estimated {estimate} evaluations, budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("field size {q} exceeds the configured cap {cap}")]
    FieldTooLarge { q: u64, cap: u64 },

    #[error("modulus {q} is too small for total degree {degree} (safety factor {factor})")]
    ModulusTooSmall { q: u64, degree: u32, factor: u64 },

    #[error("json: {0}")]
    Json(String),

    #[error("cannot encode variable {0} in the scroll JSON form")]
    UnsupportedVariable(VarId),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
