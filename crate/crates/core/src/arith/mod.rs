//! Exact scalars and the two polynomial rings the rest of the crate builds on.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`. The
//! Gaussian rationals, the dense univariate ring and the sparse Laurent ring
//! in the formal variables `beta`, `alpha`, `q` live here.

mod gaussian;
mod laurent;
mod unipoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

pub use gaussian::GaussianRational;
pub use laurent::{LaurentPoly, Monomial, Substitution, Var};
pub use unipoly::UniPoly;

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone + PartialEq + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

/// Field of coefficients; `inv` returns `None` only for zero.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

/// Selects which scalar field a Laurent polynomial is carried over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    Gaussian,
}

impl ScalarMode {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Rational => "rational",
            Self::Gaussian => "gaussian",
        }
    }
}

/// Coefficient field usable in [`LaurentPoly`].
pub trait Scalar: Field + std::fmt::Display {
    const MODE: ScalarMode;
    fn from_rational(r: &BigRational) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for BigRational {
    const MODE: ScalarMode = ScalarMode::Rational;
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

/// `x^n` by square-and-multiply.
pub fn ring_pow<R: Ring>(x: &R, mut n: u64) -> R {
    let mut base = x.clone();
    let mut acc = R::one();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base.clone();
        }
        n >>= 1;
        if n > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

/// Integer powers of a prime `p` inside a ring where `p` is a unit.
///
/// Numerically the base is `p` itself; symbolically it is the monomial `q^2`.
#[derive(Debug, Clone)]
pub struct PrimePowers<R> {
    base: R,
    inverse: R,
}

impl<R: Ring> PrimePowers<R> {
    pub fn new(base: R, inverse: R) -> Self {
        debug_assert!(base.clone() * inverse.clone() == R::one());
        Self { base, inverse }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// `p^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> R {
        if e >= 0 {
            ring_pow(&self.base, e as u64)
        } else {
            ring_pow(&self.inverse, e.unsigned_abs())
        }
    }
}

impl PrimePowers<BigRational> {
    pub fn rational(p: &BigInt) -> Self {
        let base = BigRational::from_integer(p.clone());
        let inverse = base.recip();
        Self::new(base, inverse)
    }
}

impl<C: Scalar> PrimePowers<LaurentPoly<C>> {
    /// Powers of `p = q^2` in the Laurent ring.
    pub fn symbolic() -> Self {
        Self::new(LaurentPoly::var_pow(Var::Q, 2), LaurentPoly::var_pow(Var::Q, -2))
    }
}

pub fn is_integer(r: &BigRational) -> bool {
    r.is_integer()
}

/// Converts an integral rational, failing with the rendered value otherwise.
pub fn to_integer(r: &BigRational) -> crate::Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(crate::Error::NotIntegral(r.to_string()))
    }
}

pub fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
