use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0:?} is not irreducible modulo p")]
    ReducibleModulus(Vec<u64>),
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),
    #[error("ring with {0} coordinates of size {1} does not fit the element encoding")]
    TooLarge(usize, u64),
    #[error("invalid element encoding: {0}")]
    InvalidElement(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("element does not lie in the base ring")]
    NotInBaseRing,
    #[error("element does not lie in the degree-{0} subextension")]
    NotInSubextension(usize),
    #[error("ring or length mismatch: {0}")]
    Mismatch(String),
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),
    #[error("{0} does not divide q^m - 1 = {1}")]
    NoRootOfUnity(u64, u64),
    #[error("invalid coset set: {0}")]
    InvalidSet(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("code is not cyclic")]
    NotCyclic,
    #[error("code is not constacyclic for the given unit")]
    NotConstacyclic,
    #[error("singleton residue condition violated: {0}")]
    SingletonViolation(String),
    #[error("operation on the zero code is undefined: {0}")]
    ZeroCode(&'static str),
    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        limit: u64,
    },
    #[error("matrix is not invertible")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
