use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("prime table would need ~{needed} bytes, budget is {budget} bytes")]
    ResourceBudget { needed: u64, budget: u64 },

    #[error("prime index {index} out of range (table holds {count} primes, indexing is 1-based)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("primorial witness requested for M = {m}, cap is {cap}")]
    WitnessCap { m: usize, cap: usize },

    #[error("cumulative intersection became empty at n = {n}")]
    EmptyIntersection { n: usize },

    #[error("oracle input {value} exceeds practical bound {bound}")]
    OracleBound { value: u64, bound: u64 },

    #[error("expected a {expected} envelope, got {actual}")]
    WrongEnvelopeKind { expected: String, actual: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
