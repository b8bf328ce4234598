//! Numeric local Euler factors at a single prime, stored as reciprocal
//! polynomials in `X = p^{-s}` with exact rational coefficients.

pub mod formulas;
mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::arith::{to_integer, PrimePowers, UniPoly};
use crate::satake::validate_kappa;
use crate::{Error, Result};
use formulas::HeckeEigenvalues;

pub use verify::{
    eigenvalues_at_prime, ensure_closed_forms, nonvanishing_at_prime, verify_spin_at_prime, verify_standard_at_prime,
    EigenvalueRecord, NonvanishingRecord, PrimeVerification, VERIFIED_KAPPA,
};

/// Reciprocal local factor `L_p(s)^{-1}` as a polynomial in `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerFactor {
    pub prime: BigInt,
    pub poly: UniPoly<BigRational>,
    pub degree_expected: usize,
    pub label: String,
}

impl EulerFactor {
    fn new(p: u64, poly: UniPoly<BigRational>, degree_expected: usize, label: impl Into<String>) -> Self {
        let factor = Self {
            prime: BigInt::from(p),
            poly,
            degree_expected,
            label: label.into(),
        };
        debug_assert!(factor.is_well_formed(), "{factor:?}");
        factor
    }

    /// Constant term 1 and the expected degree.
    pub fn is_well_formed(&self) -> bool {
        self.poly.coeff(0).is_one() && self.poly.degree() == Some(self.degree_expected)
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        self.poly.coeffs()
    }

    /// Coefficients `0..=degree_expected`, zero-padded.
    pub fn padded(&self) -> Vec<BigRational> {
        (0..=self.degree_expected).map(|j| self.poly.coeff(j)).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.poly.is_integral()
    }

    /// Zero-padded integer coefficients, or `NotIntegral`.
    pub fn integer_coefficients(&self) -> Result<Vec<BigInt>> {
        self.padded().iter().map(to_integer).collect()
    }
}

/// The four eigenvalues of the degree-3 lift at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpinEigenvalueData {
    #[serde(serialize_with = "crate::report::bigint")]
    pub prime: BigInt,
    pub kappa: i64,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_p: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t1: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t2: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t3: BigInt,
}

fn powers(p: u64) -> PrimePowers<BigRational> {
    PrimePowers::rational(&BigInt::from(p))
}

fn q(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// `1 - a_p p^shift X + p^{k-1+2 shift} X^2`.
pub fn hecke_local(a_p: &BigInt, k: i64, p: u64, shift: i64) -> EulerFactor {
    let poly = formulas::hecke_poly(&q(a_p), k, shift, &powers(p));
    EulerFactor::new(p, poly, 2, format!("hecke(k={k},shift={shift})"))
}

/// Rankin convolution of `f` (weight `k1`) and `g` (weight `k2`).
pub fn rankin_local(a_f: &BigInt, k1: i64, a_g: &BigInt, k2: i64, p: u64) -> Result<EulerFactor> {
    if k1 % 2 != 0 || k2 % 2 != 0 {
        return Err(Error::InvalidParameter(format!(
            "weights must be even, got {k1} and {k2}"
        )));
    }
    let poly = formulas::rankin_poly(&q(a_f), k1, &q(a_g), k2, &powers(p));
    Ok(EulerFactor::new(p, poly, 4, format!("rankin(k1={k1},k2={k2})")))
}

/// Symmetric-square factor in the arithmetic normalization.
pub fn sym2_local(a_p: &BigInt, k: i64, p: u64) -> EulerFactor {
    let poly = formulas::sym2_poly(&q(a_p), k, &powers(p));
    EulerFactor::new(p, poly, 3, format!("sym2(k={k})"))
}

/// Eigenvalues of the lift of `f` (weight `kappa`) and `g` (weight `2 kappa - 4`).
pub fn miyawaki_spin_eigenvalues(a_f: &BigInt, a_g: &BigInt, kappa: i64, p: u64) -> Result<SpinEigenvalueData> {
    validate_kappa(kappa)?;
    let e = formulas::miyawaki_eigenvalues(&q(a_f), &q(a_g), kappa, &powers(p));
    Ok(SpinEigenvalueData {
        prime: BigInt::from(p),
        kappa,
        lambda_p: to_integer(&e.lambda_p)?,
        lambda_t1: to_integer(&e.lambda_t1)?,
        lambda_t2: to_integer(&e.lambda_t2)?,
        lambda_t3: to_integer(&e.lambda_t3)?,
    })
}

/// Degree-8 spinor denominator `sum_m (-1)^m c(m) X^m` from the eigenvalues.
pub fn andrianov_q(eigs: &SpinEigenvalueData) -> Result<EulerFactor> {
    let p =
        u64::try_from(&eigs.prime).map_err(|_| Error::InvalidParameter(format!("prime {} too large", eigs.prime)))?;
    let e = HeckeEigenvalues {
        lambda_p: q(&eigs.lambda_p),
        lambda_t1: q(&eigs.lambda_t1),
        lambda_t2: q(&eigs.lambda_t2),
        lambda_t3: q(&eigs.lambda_t3),
    };
    let poly = formulas::andrianov_poly(&e, &powers(p));
    Ok(EulerFactor::new(p, poly, 8, "spin(andrianov)"))
}

/// `L(s - kappa + 2, f) L(s - kappa + 3, f) L(s, f x g)`, degree 8.
pub fn spin_rhs(a_f: &BigInt, a_g: &BigInt, kappa: i64, p: u64) -> Result<EulerFactor> {
    validate_kappa(kappa)?;
    let poly = formulas::spin_rhs_poly(&q(a_f), &q(a_g), kappa, &powers(p));
    Ok(EulerFactor::new(p, poly, 8, "spin(product)"))
}

/// `St(f) L(s + kappa - 2, g) L(s + kappa - 3, g)` with `St(f)` in the
/// arithmetic normalization; rational coefficients.
pub fn standard7_rhs(a_f: &BigInt, a_g: &BigInt, kappa: i64, p: u64) -> Result<EulerFactor> {
    validate_kappa(kappa)?;
    let poly = formulas::standard7_literal_poly(&q(a_f), &q(a_g), kappa, &powers(p));
    Ok(EulerFactor::new(p, poly, 7, "standard(mixed normalization)"))
}

/// The same product with `St(f)` renormalized to unit scale.
pub fn standard7_normalized_rhs(a_f: &BigInt, a_g: &BigInt, kappa: i64, p: u64) -> Result<EulerFactor> {
    validate_kappa(kappa)?;
    let poly = formulas::standard7_normalized_poly(&q(a_f), &q(a_g), kappa, &powers(p));
    Ok(EulerFactor::new(p, poly, 7, "standard(normalized)"))
}

/// `(1 - X) prod_{j=1}^{2m} L(s + k + m - j, g)^{-1}`, degree `4m + 1`.
pub fn ikeda_standard_factor(a_g: &BigInt, k: i64, m: i64, p: u64) -> Result<EulerFactor> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("m must be >= 1, got {m}")));
    }
    let poly = formulas::ikeda_standard_poly(&q(a_g), k, m, &powers(p));
    Ok(EulerFactor::new(
        p,
        poly,
        (4 * m + 1) as usize,
        format!("ikeda standard(k={k},m={m})"),
    ))
}

/// The degree-2 spinor denominator, term by term as written.
pub fn genus2_q(lam_p: &BigInt, lam_t2: &BigInt, k: i64, p: u64) -> EulerFactor {
    let poly = formulas::genus2_poly(&q(lam_p), &q(lam_t2), &powers(p));
    let degree = poly.degree().unwrap_or(0);
    EulerFactor {
        prime: BigInt::from(p),
        poly,
        degree_expected: if lam_t2.is_zero() { degree } else { 4 },
        label: format!("genus2(k={k})"),
    }
}

/// `(p^{k2/2 - 1}(p + 1))^2 > 4 p^{k2 - 1}`: the Ramanujan bound keeps
/// `a_g(p) + p^{k2/2} + p^{k2/2 - 1}` away from zero.
pub fn nonvanishing_inequality(p: u64, k2: i64) -> bool {
    let p_big = BigInt::from(p);
    let half = u32::try_from(k2 / 2 - 1).expect("weight fits");
    let lhs = Pow::pow(&p_big, half) * (&p_big + 1u32);
    &lhs * &lhs > BigInt::from(4) * Pow::pow(&p_big, u32::try_from(k2 - 1).expect("weight fits"))
}

/// `lambda(p) = 0` iff `a_f(p) = 0`, together with the inequality above.
pub fn nonvanishing_check(a_f: &BigInt, a_g: &BigInt, kappa: i64, p: u64) -> Result<bool> {
    let eigs = miyawaki_spin_eigenvalues(a_f, a_g, kappa, p)?;
    let inequality = nonvanishing_inequality(p, 2 * kappa - 4);
    Ok(inequality && (eigs.lambda_p.is_zero() == a_f.is_zero()))
}

/// `p^e` as a rational, for scaling `X`.
pub(crate) fn p_power(p: u64, e: i64) -> BigRational {
    powers(p).pow(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn ints(f: &EulerFactor) -> Vec<BigInt> {
        f.integer_coefficients().unwrap()
    }

    fn big(s: &str) -> BigInt {
        s.parse().unwrap()
    }

    #[test]
    fn hecke_examples() {
        assert_eq!(ints(&hecke_local(&b(0), 12, 2, 0)), vec![b(1), b(0), b(2048)]);
        assert_eq!(ints(&hecke_local(&b(-24), 12, 2, 0)), vec![b(1), b(24), b(2048)]);
        assert_eq!(ints(&hecke_local(&b(-24), 12, 2, 9)), vec![b(1), b(12288), b(1 << 29)]);
        let negative = hecke_local(&b(456), 20, 2, -10);
        assert!(!negative.is_integral());
        assert_eq!(negative.coefficients()[2], BigRational::new(b(1), b(2)));
    }

    #[test]
    fn rankin_examples() {
        let r = rankin_local(&b(-24), 12, &b(456), 20, 2).unwrap();
        let c = ints(&r);
        assert_eq!(c[1], b(10944));
        assert_eq!(c[3], &c[1] * Pow::pow(&b(2), 30u32));
        let zero = ints(&rankin_local(&b(0), 12, &b(456), 20, 2).unwrap());
        assert!(zero[1].is_zero() && zero[3].is_zero());
        assert_eq!(zero[2], b(456 * 456 * 2048) - b(2) * Pow::pow(&b(2), 30u32));
        assert!(rankin_local(&b(1), 11, &b(1), 20, 2).is_err());
    }

    #[test]
    fn sym2_examples() {
        let zero = ints(&sym2_local(&b(0), 12, 2));
        assert_eq!(zero, vec![b(1), b(2048), -b(1 << 22), -(b(1) << 33usize)]);
        let delta = ints(&sym2_local(&b(-24), 12, 2));
        assert_eq!(delta, vec![b(1), b(1472), big("-3014656"), big("-8589934592")]);
        assert_eq!(delta[3], -(b(1) << 33usize));
    }

    #[test]
    fn eigenvalues_at_two() {
        let e = miyawaki_spin_eigenvalues(&b(-24), &b(456), 12, 2).unwrap();
        assert_eq!(e.lambda_p, b(-47808));
        assert_eq!(e.lambda_t1, b(235339776));
        assert_eq!(e.lambda_t2, b(66060288));
        assert_eq!(e.lambda_t3, b(1 << 24));
        assert_eq!(e.lambda_t2, b(576 << 16) + b(456 * 3) * b(1 << 17) - b(9 << 24));
        assert!(miyawaki_spin_eigenvalues(&b(1), &b(1), 13, 2).is_err());
    }

    #[test]
    fn spin_factor_at_two_matches_frozen_product() {
        let expected: Vec<BigInt> = [
            "1",
            "47808",
            "1970143232",
            "31682363129856",
            "-1067313529268207616",
            "34018678375681930297344",
            "2271420499328436390626066432",
            "59183437398155460182377330900992",
            "1329227995784915872903807060280344576",
        ]
        .iter()
        .map(|s| big(s))
        .collect();
        let rhs = spin_rhs(&b(-24), &b(456), 12, 2).unwrap();
        assert_eq!(ints(&rhs), expected);
        let e = miyawaki_spin_eigenvalues(&b(-24), &b(456), 12, 2).unwrap();
        let lhs = andrianov_q(&e).unwrap();
        assert_eq!(ints(&lhs), expected);
        assert_eq!(expected[8], Pow::pow(&b(2), 120u32));
        assert_eq!(expected[7], -Pow::pow(&b(2), 90u32) * &e.lambda_p);
    }

    #[test]
    fn spin_x_coefficient_is_lambda_p() {
        for (af, ag, p) in [(-24, 456, 2), (252, 50652, 3), (7, -3, 5), (0, 11, 7)] {
            let rhs = spin_rhs(&b(af), &b(ag), 12, p).unwrap();
            let e = miyawaki_spin_eigenvalues(&b(af), &b(ag), 12, p).unwrap();
            assert_eq!(-ints(&rhs)[1].clone(), e.lambda_p);
            assert_eq!(ints(&rhs)[0], b(1));
        }
    }

    #[test]
    fn standard_rhs_shapes() {
        let lit = standard7_rhs(&b(-24), &b(456), 12, 2).unwrap();
        assert_eq!(lit.degree(), 7);
        assert!(lit.coefficients()[0].is_one());
        let norm = standard7_normalized_rhs(&b(-24), &b(456), 12, 2).unwrap();
        assert_eq!(norm.degree(), 7);
        assert_ne!(lit, norm);
    }

    #[test]
    fn ikeda_shapes() {
        let f = ikeda_standard_factor(&b(456), 10, 2, 2).unwrap();
        assert_eq!(f.degree(), 9);
        assert!(f.coefficients()[0].is_one());
        assert!(ikeda_standard_factor(&b(456), 10, 0, 2).is_err());
    }

    #[test]
    fn genus2_term_by_term() {
        assert_eq!(ints(&genus2_q(&b(0), &b(0), 12, 2)), vec![b(1)]);
        let f = genus2_q(&b(3), &b(5), 12, 2);
        let c = ints(&f);
        assert_eq!(c[0], b(1));
        assert_eq!(c[4], b(64 * 25));
        assert_eq!(c[4], Pow::pow(&b(8 * 5), 2u32));
        assert_eq!(c[3], b(-8 * 3 * 5));
        assert_eq!(c[3], &c[1] * b(8 * 5));
    }

    #[test]
    fn genus1_reproduces_hecke_factor() {
        let pw = powers(2);
        let g1 = formulas::genus1_poly(&rational(-24), &p_power(2, 10), &pw);
        assert_eq!(g1, hecke_local(&b(-24), 12, 2, 0).poly);
    }

    #[test]
    fn nonvanishing() {
        assert!(nonvanishing_check(&b(-24), &b(456), 12, 2).unwrap());
        assert!(nonvanishing_check(&b(0), &b(456), 12, 2).unwrap());
        assert_eq!(b(512 * 3) * b(512 * 3), b(2359296));
        assert!(nonvanishing_inequality(2, 20));
        assert!((2..200).all(|p| nonvanishing_inequality(p, 20)));
        assert!(!nonvanishing_inequality(1, 20));
    }
}
