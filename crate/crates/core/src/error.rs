use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("non-unit: only single-term elements with invertible coefficient can be inverted")]
    NonUnit,

    #[error("substitution for {var} produces a negative power of a non-invertible image")]
    NonInvertibleSubstitution { var: &'static str },

    #[error("undefined: divisor sum requires n >= 1")]
    Undefined,

    #[error("unsupported Eisenstein weight {0} (expected 4 or 6)")]
    UnsupportedWeight(u32),

    #[error("internal error: inexact division by {divisor} at index {index}")]
    InexactDivision { divisor: BigInt, index: usize },

    #[error("insufficient q-expansion length: need index {needed}, series holds up to {available}")]
    InsufficientLength { needed: u64, available: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("weight {0} is invalid: expected an even integer >= 12")]
    InvalidWeight(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial is not invariant under beta -> 1/beta and alpha -> 1/alpha")]
    NotWeylSymmetric,

    #[error("trace evaluation left an odd power q^{0} of the square root of p")]
    OddPowerOfRoot(i64),

    #[error("coefficient {0} is not an integer")]
    NotIntegral(String),

    #[error("closed-form factor failed its symbolic check: {0}")]
    ClosedFormMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
