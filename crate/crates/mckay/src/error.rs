use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("size limit exceeded: {what} needs {size}, limit is {limit}")]
    LimitExceeded { what: String, size: u128, limit: u128 },
    #[error("gcd({a}, {m}) != 1")]
    NotCoprime { a: i64, m: u64 },
    #[error("ell = {ell} divides q = {q}")]
    EllDividesQ { ell: u64, q: u64 },
    #[error("ell = {ell} does not divide the group order")]
    EllDoesNotDivide { ell: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
