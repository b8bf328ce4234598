use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Zero};

use super::RatLaurent;
use crate::arith::{Monomial, Var};
use crate::{Error, Result};

/// `(i, j, e)` standing for `(beta + 1/beta)^i (alpha + 1/alpha)^j q^e`.
pub type TraceKey = (u32, u32, i64);

/// A Laurent polynomial invariant under `beta -> 1/beta` and `alpha -> 1/alpha`,
/// rewritten as a polynomial in the two traces and `q`.
///
/// This is the bridge from symbolic identities to numbers: the traces are
/// recovered from integer Fourier coefficients as
/// `beta + 1/beta = a_f q^{-(k_f - 1)}` and `alpha + 1/alpha = a_g q^{-(k_g - 1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePoly {
    terms: BTreeMap<TraceKey, BigRational>,
}

impl TracePoly {
    /// Fails with `NotWeylSymmetric` if the input is not invariant.
    pub fn reduce(poly: &RatLaurent) -> Result<Self> {
        let mut rest = poly.clone();
        let mut terms = BTreeMap::new();
        let mut beta_powers = vec![RatLaurent::one()];
        let mut alpha_powers = vec![RatLaurent::one()];
        while let Some((m, c)) = rest.leading_term() {
            let c = c.clone();
            if m.beta < 0 || m.alpha < 0 {
                return Err(Error::NotWeylSymmetric);
            }
            let (i, j) = (m.beta as usize, m.alpha as usize);
            while beta_powers.len() <= i {
                let next = beta_powers.last().unwrap() * &RatLaurent::trace(Var::Beta);
                beta_powers.push(next);
            }
            while alpha_powers.len() <= j {
                let next = alpha_powers.last().unwrap() * &RatLaurent::trace(Var::Alpha);
                alpha_powers.push(next);
            }
            let basis = (&beta_powers[i] * &alpha_powers[j]).mul_monomial(Monomial::of(Var::Q, m.q));
            rest = &rest - &basis.scale(&c);
            terms.insert((i as u32, j as u32, m.q), c);
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TraceKey, &BigRational)> {
        self.terms.iter()
    }

    /// Expands back into the Laurent ring.
    pub fn expand(&self) -> RatLaurent {
        let tb = RatLaurent::trace(Var::Beta);
        let ta = RatLaurent::trace(Var::Alpha);
        let mut acc = RatLaurent::zero();
        for (&(i, j, e), c) in &self.terms {
            let basis = &tb.pow(i.into()).expect("non-negative power") * &ta.pow(j.into()).expect("non-negative power");
            acc = &acc + &basis.mul_monomial(Monomial::of(Var::Q, e)).scale(c);
        }
        acc
    }

    /// Numeric value at a prime `p`, given `a_f` of weight `weight_f` and
    /// `a_g` of weight `weight_g`. All surviving powers of `q` must be even.
    pub fn evaluate(&self, a_f: &BigInt, weight_f: i64, a_g: &BigInt, weight_g: i64, p: u64) -> Result<BigRational> {
        let p = BigRational::from_integer(BigInt::from(p));
        let mut total = BigRational::zero();
        for (&(i, j, e), c) in &self.terms {
            let q_exp = e - i64::from(i) * (weight_f - 1) - i64::from(j) * (weight_g - 1);
            if q_exp % 2 != 0 {
                return Err(Error::OddPowerOfRoot(q_exp));
            }
            let p_pow = if q_exp >= 0 {
                Pow::pow(&p, (q_exp / 2) as u64)
            } else {
                Pow::pow(&p.recip(), (-q_exp / 2) as u64)
            };
            let term = c * BigRational::from_integer(Pow::pow(a_f, i) * Pow::pow(a_g, j)) * p_pow;
            total += term;
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::{spin_poly_symbolic, symbolic_a_f, symbolic_a_g, SatakeAssignment};

    #[test]
    fn traces_reduce_to_single_terms() {
        let af: RatLaurent = symbolic_a_f(12);
        let t = TracePoly::reduce(&af).unwrap();
        assert_eq!(
            t.terms().collect::<Vec<_>>(),
            vec![(&(1, 0, 11), &BigRational::from_integer(1.into()))]
        );
        assert_eq!(
            t.evaluate(&BigInt::from(-24), 12, &BigInt::from(0), 20, 2).unwrap(),
            BigRational::from_integer((-24).into())
        );
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let beta = RatLaurent::var(Var::Beta);
        assert_eq!(TracePoly::reduce(&beta), Err(Error::NotWeylSymmetric));
    }

    #[test]
    fn odd_root_power_is_rejected() {
        let q = RatLaurent::var(Var::Q);
        let t = TracePoly::reduce(&q).unwrap();
        assert_eq!(
            t.evaluate(&BigInt::from(1), 12, &BigInt::from(1), 20, 2),
            Err(Error::OddPowerOfRoot(1))
        );
    }

    #[test]
    fn reduce_then_expand_round_trips() {
        let a = SatakeAssignment::new(12, 1).unwrap();
        let spin = spin_poly_symbolic(&a);
        for c in spin.coeffs() {
            let t = TracePoly::reduce(c).unwrap();
            assert_eq!(&t.expand(), c);
        }
        let mixed = &(&symbolic_a_f::<BigRational>(12) * &symbolic_a_f(12)) * &symbolic_a_g(12);
        assert_eq!(TracePoly::reduce(&mixed).unwrap().expand(), mixed);
    }
}
