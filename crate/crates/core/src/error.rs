use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,
    #[error("lcm undefined for a zero argument")]
    ZeroLcm,
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime-power moduli unsupported: {0} has a repeated prime factor")]
    PrimePowerModulus(u64),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("overlap is inconsistent with the leading words")]
    InconsistentOverlap,
    #[error("bound too small: generators reach length {needed}, bound is {bound}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("lifting side condition violated: {0}")]
    SideCondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
