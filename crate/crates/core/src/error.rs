use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u128),
    #[error("prime must exceed 3, got {0}")]
    PrimeTooSmall(u64),
    #[error("modulus {0} must be odd and positive")]
    BadModulus(i128),
    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: i128, m: u128 },
    #[error("p = {p} divides m = {m}")]
    PrimeDividesParameter { p: u64, m: i128 },
    #[error("index {k} out of range for p = {p}")]
    IndexOutOfRange { k: u64, p: u64 },
    #[error("convention {convention} cannot be met by x = {x}")]
    Unsatisfiable { convention: &'static str, x: i64 },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
