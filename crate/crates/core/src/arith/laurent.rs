use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::Serialize;

use super::{ring_pow, Ring, Scalar};
use crate::{Error, Result};

/// The three formal variables of the Satake ring.
///
/// `Beta` is a square root of the elliptic Satake parameter of the weight-k1
/// form, `Alpha` is the parameter of the weight-k2 form and `Q` stands for
/// `p^(1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Beta,
    Alpha,
    Q,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Beta, Var::Alpha, Var::Q];

    pub fn name(self) -> &'static str {
        match self {
            Var::Beta => "beta",
            Var::Alpha => "alpha",
            Var::Q => "q",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Exponent triple `beta^b * alpha^a * q^e`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub beta: i64,
    pub alpha: i64,
    pub q: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        beta: 0,
        alpha: 0,
        q: 0,
    };

    pub fn new(beta: i64, alpha: i64, q: i64) -> Self {
        Self { beta, alpha, q }
    }

    pub fn of(var: Var, e: i64) -> Self {
        let mut m = Self::ONE;
        m.set(var, e);
        m
    }

    pub fn get(&self, var: Var) -> i64 {
        match var {
            Var::Beta => self.beta,
            Var::Alpha => self.alpha,
            Var::Q => self.q,
        }
    }

    fn set(&mut self, var: Var, e: i64) {
        match var {
            Var::Beta => self.beta = e,
            Var::Alpha => self.alpha = e,
            Var::Q => self.q = e,
        }
    }

    pub fn times(self, other: Self) -> Self {
        Self::new(self.beta + other.beta, self.alpha + other.alpha, self.q + other.q)
    }

    pub fn inverse(self) -> Self {
        Self::new(-self.beta, -self.alpha, -self.q)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ONE {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for var in Var::ALL {
            match self.get(var) {
                0 => {}
                1 => parts.push(var.name().to_string()),
                e => parts.push(format!("{}^{}", var.name(), e)),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse Laurent polynomial in `beta`, `alpha`, `q` over a scalar field.
///
/// No zero coefficient is ever stored; the zero element is the empty map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, C::one())
    }

    pub fn var(var: Var) -> Self {
        Self::var_pow(var, 1)
    }

    pub fn var_pow(var: Var, e: i64) -> Self {
        Self::monomial(Monomial::of(var, e))
    }

    /// `v + v^-1`.
    pub fn trace(var: Var) -> Self {
        &Self::var(var) + &Self::var_pow(var, -1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The single term, if this element is a nonzero monomial.
    pub fn as_monomial(&self) -> Option<(Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest term in (beta, alpha, q) lexicographic order.
    pub fn leading_term(&self) -> Option<(Monomial, &C)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Inverse of a unit. Only single terms with invertible coefficient are units.
    pub fn invert(&self) -> Result<Self> {
        let (m, c) = self.as_monomial().ok_or(Error::NonUnit)?;
        let inv = c.inv().ok_or(Error::NonUnit)?;
        Ok(Self::term(m.inverse(), inv))
    }

    /// `self^e`; negative `e` requires a unit.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(ring_pow(self, e as u64))
        } else {
            Ok(ring_pow(&self.invert()?, e.unsigned_abs()))
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.times(m), c.clone())).collect(),
        }
    }

    /// Applies the ring homomorphism fixed by `sub`.
    pub fn substitute(&self, sub: &Substitution<C>) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for var in Var::ALL {
                let e = m.get(var);
                if e == 0 {
                    continue;
                }
                let factor = match sub.image(var) {
                    None => Self::var_pow(var, e),
                    Some(img) => img
                        .pow(e)
                        .map_err(|_| Error::NonInvertibleSubstitution { var: var.name() })?,
                };
                acc = &acc * &factor;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub fn map_scalars<D: Scalar>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

/// Assignment `var -> image` for [`LaurentPoly::substitute`]; unassigned
/// variables map to themselves.
#[derive(Debug, Clone)]
pub struct Substitution<C> {
    images: [Option<LaurentPoly<C>>; 3],
}

impl<C: Scalar> Substitution<C> {
    pub fn identity() -> Self {
        Self {
            images: [None, None, None],
        }
    }

    pub fn with(mut self, var: Var, image: LaurentPoly<C>) -> Self {
        self.images[var.index()] = Some(image);
        self
    }

    pub fn image(&self, var: Var) -> Option<&LaurentPoly<C>> {
        self.images[var.index()].as_ref()
    }
}

impl<C: Scalar> Ring for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(C::from_bigint(n))
    }
}

impl<C: Scalar> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(*mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if *m == Monomial::ONE {
                    c.to_string()
                } else if *c == C::one() {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
