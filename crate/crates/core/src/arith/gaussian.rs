use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{Field, Scalar, ScalarMode};

/// Element `re + im*i` of the Gaussian rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::from_integer(1.into()))
    }

    pub fn from_real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self::new(re, im)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl super::Ring for GaussianRational {
    fn zero() -> Self {
        Self::new(Zero::zero(), Zero::zero())
    }
    fn one() -> Self {
        Self::from_real(BigRational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_real(BigRational::from_integer(n.clone()))
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }
}

impl Scalar for GaussianRational {
    const MODE: ScalarMode = ScalarMode::Gaussian;
    fn from_rational(r: &BigRational) -> Self {
        Self::from_real(r.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({} {} {}i)", self.re, sign, self.im.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rational, Ring};
    use proptest::prelude::*;

    fn gauss(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::new(a.into(), b.into()),
            BigRational::new(c.into(), d.into()),
        )
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.clone() * i, -GaussianRational::one());
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(GaussianRational::zero().inv().is_none());
        assert_eq!(GaussianRational::i().inv(), Some(-GaussianRational::i()));
    }

    proptest! {
        #[test]
        fn norm_is_x_times_conjugate(
            a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20
        ) {
            let x = gauss(a, b, c, d);
            let prod = x.clone() * x.conj();
            prop_assert!(prod.is_real());
            prop_assert_eq!(&prod.re, &x.norm());
            prop_assert!(x.norm() >= rational(0));
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn inverse_round_trips(
            a in -50i64..50, b in 1i64..20, c in -50i64..50, d in 1i64..20
        ) {
            let x = gauss(a, b, c, d);
            if let Some(inv) = x.inv() {
                prop_assert_eq!(x * inv, GaussianRational::one());
            }
        }
    }
}
