use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ring_pow, Ring};

/// Dense univariate polynomial in `X`, constant term first.
///
/// Trailing zero coefficients are never stored, so the zero polynomial is the
/// empty vector and equality is structural.
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `1 - root*X`.
    pub fn linear_factor(root: R) -> Self {
        Self::new(vec![R::one(), -root])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `X^j`, zero beyond the degree.
    pub fn coeff(&self, j: usize) -> R {
        self.coeffs.get(j).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Realizes `X -> c*X`: the coefficient of `X^j` is multiplied by `c^j`.
    pub fn scale_variable(&self, c: &R) -> Self {
        let mut power = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(out)
    }

    /// Reduction modulo `X^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, n: u64) -> Self {
        ring_pow(self, n)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        R: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }
}

impl UniPoly<BigRational> {
    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(R::from_bigint(n))
    }
}

impl<R: Ring> Add for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, rhs: Self) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<R: Ring> Sub for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn sub(self, rhs: Self) -> UniPoly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl<R: Ring> Mul for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, rhs: Self) -> UniPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.clone() * b.clone();
                out[i + j] = std::mem::replace(&mut out[i + j], R::zero()) + t;
            }
        }
        UniPoly::new(out)
    }
}

impl<R: Ring> Add for UniPoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Ring> Sub for UniPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Ring> Mul for UniPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Ring> Neg for UniPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Ring + fmt::Display> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use proptest::prelude::*;

    type Q = UniPoly<BigRational>;

    fn q(c: &[i64]) -> Q {
        Q::from_ints(c)
    }

    #[test]
    fn multiply_by_one_is_identity() {
        let a = q(&[1, 24, 2048]);
        assert_eq!(&Q::one() * &a, a);
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q(&[1, -1]) * &q(&[1, 1]), q(&[1, 0, -1]));
    }

    #[test]
    fn product_of_two_hecke_factors() {
        let a = q(&[1, 24, 2048]);
        let b = Q::new(vec![rational(1), rational(12288), rational(BigInt::from(2).pow(29))]);
        let c = &a * &b;
        assert_eq!(c.degree(), Some(4));
        // 24 + 12288 by hand
        assert_eq!(c.coeff(1), rational(12312));
    }

    #[test]
    fn scale_variable_examples() {
        let a = q(&[1, 24, 2048]);
        assert_eq!(a.scale_variable(&rational(1)), a);
        let scaled = a.scale_variable(&rational(512));
        assert_eq!(scaled.coeff(1), rational(24 * 512));
        assert_eq!(scaled.coeff(2), rational(2048) * rational(1 << 18));
        assert_eq!(q(&[1, -1]).scale_variable(&rational(-1)), q(&[1, 1]));
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(q(&[0, 0, 0]), Q::zero());
        assert_eq!(Q::zero().degree(), None);
        assert_eq!(&q(&[1, 2]) - &q(&[1, 2]), Q::zero());
    }

    #[test]
    fn integrality_predicate() {
        assert!(q(&[1, -3, 7]).is_integral());
        let half = Q::new(vec![rational(1), BigRational::new(1.into(), 2.into())]);
        assert!(!half.is_integral());
        assert!(half.to_integers().is_none());
    }

    fn small_poly() -> impl Strategy<Value = Q> {
        prop::collection::vec(-20i64..20, 0..5).prop_map(|c| q(&c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn degree_of_product_is_additive(a in small_poly(), b in small_poly()) {
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn scaling_is_invertible(a in small_poly(), num in 1i64..30, den in 1i64..30, neg in any::<bool>()) {
            let c = BigRational::new(if neg { -num } else { num }.into(), den.into());
            let back = a.scale_variable(&c).scale_variable(&c.recip());
            prop_assert_eq!(back, a);
        }
    }
}
