//! Satake-parameter identities as exact Laurent-polynomial computations.
//!
//! The degree-3 lift is described by `mu1 = beta^2`, `mu2 = alpha q`,
//! `mu3 = alpha^-1 q` and `mu0 = eps q^{3 kappa - 7} beta^-1`, where `q`
//! stands for `p^(1/2)`. Fourier coefficients become
//! `a_f = q^{kappa-1}(beta + 1/beta)` and `a_g = q^{2 kappa - 5}(alpha + 1/alpha)`.

mod identities;
mod trace;

use serde::Serialize;

use crate::arith::{
    GaussianRational, LaurentPoly, Monomial, PrimePowers, Scalar, ScalarMode, Substitution, UniPoly, Var,
};
use crate::{Error, Result};

pub use identities::{
    check_all_c_coefficients, check_degenerate_case, check_g_factor, check_genus1_consistency, check_hecke_closed_form,
    check_lambda_p, check_rankin_closed_form, check_spin_palindrome, check_standard_factorization,
    check_standard_renormalization, check_sym2_closed_form, check_t2_identity, check_theorem_factorization,
    check_weyl_invariance, check_witt_transfer, g_factor_reciprocal, identity_suite,
};
pub use trace::{TraceKey, TracePoly};

pub type RatLaurent = LaurentPoly<num_rational::BigRational>;

/// Polynomial in `X` with Laurent coefficients.
pub type SymbolicPoly<C> = UniPoly<LaurentPoly<C>>;

pub fn validate_kappa(kappa: i64) -> Result<()> {
    if kappa < 12 || kappa % 2 != 0 {
        Err(Error::InvalidWeight(kappa))
    } else {
        Ok(())
    }
}

/// Satake parameters of the degree-3 lift at a generic prime.
#[derive(Debug, Clone, PartialEq)]
pub struct SatakeAssignment<C> {
    pub kappa: i64,
    pub epsilon: i8,
    pub mu0: LaurentPoly<C>,
    pub mu1: LaurentPoly<C>,
    pub mu2: LaurentPoly<C>,
    pub mu3: LaurentPoly<C>,
}

impl<C: Scalar> SatakeAssignment<C> {
    pub fn new(kappa: i64, epsilon: i8) -> Result<Self> {
        validate_kappa(kappa)?;
        if epsilon != 1 && epsilon != -1 {
            return Err(Error::InvalidParameter(format!(
                "epsilon must be +1 or -1, got {epsilon}"
            )));
        }
        let mu0 = LaurentPoly::term(Monomial::new(-1, 0, 3 * kappa - 7), C::from_i64(epsilon.into()));
        Ok(Self {
            kappa,
            epsilon,
            mu0,
            mu1: LaurentPoly::monomial(Monomial::new(2, 0, 0)),
            mu2: LaurentPoly::monomial(Monomial::new(0, 1, 1)),
            mu3: LaurentPoly::monomial(Monomial::new(0, -1, 1)),
        })
    }

    pub fn substitute(&self, sub: &Substitution<C>) -> Result<Self> {
        Ok(Self {
            kappa: self.kappa,
            epsilon: self.epsilon,
            mu0: self.mu0.substitute(sub)?,
            mu1: self.mu1.substitute(sub)?,
            mu2: self.mu2.substitute(sub)?,
            mu3: self.mu3.substitute(sub)?,
        })
    }

    /// Exchanges `mu2` and `mu3` (a Weyl group element).
    pub fn swap_mu2_mu3(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.mu2, &mut out.mu3);
        out
    }

    /// `mu0^2 mu1 mu2 mu3`, which must equal `p^{3 kappa - 6}`.
    pub fn similitude(&self) -> LaurentPoly<C> {
        &(&(&(&self.mu0 * &self.mu0) * &self.mu1) * &self.mu2) * &self.mu3
    }

    /// The eight spin eigenvalues `mu0 * prod_{i in S} mu_i`, subsets in the
    /// order {}, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
    pub fn spin_eigenvalues(&self) -> Vec<LaurentPoly<C>> {
        let (m0, m1, m2, m3) = (&self.mu0, &self.mu1, &self.mu2, &self.mu3);
        vec![
            m0.clone(),
            m0 * m1,
            m0 * m2,
            m0 * m3,
            &(m0 * m1) * m2,
            &(m0 * m1) * m3,
            &(m0 * m2) * m3,
            &(&(m0 * m1) * m2) * m3,
        ]
    }
}

impl SatakeAssignment<num_rational::BigRational> {
    pub fn to_gaussian(&self) -> SatakeAssignment<GaussianRational> {
        let lift = |p: &RatLaurent| p.map_scalars(GaussianRational::from_rational);
        SatakeAssignment {
            kappa: self.kappa,
            epsilon: self.epsilon,
            mu0: lift(&self.mu0),
            mu1: lift(&self.mu1),
            mu2: lift(&self.mu2),
            mu3: lift(&self.mu3),
        }
    }
}

/// `q^{kappa-1}(beta + 1/beta)`.
pub fn symbolic_a_f<C: Scalar>(kappa: i64) -> LaurentPoly<C> {
    LaurentPoly::trace(Var::Beta).mul_monomial(Monomial::of(Var::Q, kappa - 1))
}

/// `q^{2 kappa - 5}(alpha + 1/alpha)`.
pub fn symbolic_a_g<C: Scalar>(kappa: i64) -> LaurentPoly<C> {
    LaurentPoly::trace(Var::Alpha).mul_monomial(Monomial::of(Var::Q, 2 * kappa - 5))
}

pub fn symbolic_powers<C: Scalar>() -> PrimePowers<LaurentPoly<C>> {
    PrimePowers::symbolic()
}

/// `prod_S (1 - mu0 mu_S X)` over the eight subsets `S` of {1,2,3}.
pub fn spin_poly_symbolic<C: Scalar>(a: &SatakeAssignment<C>) -> SymbolicPoly<C> {
    let factors: Vec<_> = a.spin_eigenvalues().into_iter().map(UniPoly::linear_factor).collect();
    UniPoly::product(&factors)
}

/// `(1 - X) prod_i (1 - mu_i X)(1 - mu_i^-1 X)`.
pub fn standard_poly_symbolic<C: Scalar>(a: &SatakeAssignment<C>) -> Result<SymbolicPoly<C>> {
    let mut acc = UniPoly::linear_factor(LaurentPoly::one());
    for mu in [&a.mu1, &a.mu2, &a.mu3] {
        acc = &acc * &UniPoly::linear_factor(mu.clone());
        acc = &acc * &UniPoly::linear_factor(mu.invert()?);
    }
    Ok(acc)
}

/// `S(a,b,c) = 1 + a + b + c + ab + ac + bc + abc`.
pub fn s_poly<R: crate::arith::Ring>(a: &R, b: &R, c: &R) -> R {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    R::one()
        + a.clone()
        + b.clone()
        + c.clone()
        + a.clone() * b.clone()
        + a.clone() * c.clone()
        + b.clone() * c.clone()
        + a * b * c
}

/// The 21-summand polynomial `T(a,b,c)`, kept summand by summand.
pub fn t_poly<R: crate::arith::Ring>(a: &R, b: &R, c: &R) -> R {
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let ab = a.clone() * b.clone();
    let ac = a.clone() * c.clone();
    let bc = b.clone() * c.clone();
    let abc = ab.clone() * c.clone();
    let sum = |xs: &[&R]| xs.iter().fold(R::zero(), |acc, x| acc + (*x).clone());

    let terms = [
        ab.clone() * sum(&[&c, &ab, &ac, &bc, &abc]),
        ac.clone() * sum(&[&ab, &ac, &bc, &abc]),
        a.clone() * ab.clone() * sum(&[&ac, &bc, &abc]),
        a.clone() * ac.clone() * sum(&[&bc, &abc]),
        ab.clone() * c.clone() * abc.clone(),
        bc.clone() * sum(&[&ab, &ac, &bc, &abc]),
        b.clone() * ab.clone() * sum(&[&ac, &bc, &abc]),
        b.clone() * ac.clone() * sum(&[&bc, &abc]),
        b.clone() * bc.clone() * abc.clone(),
        c.clone() * ab.clone() * sum(&[&ac, &bc, &abc]),
        c.clone() * ac.clone() * sum(&[&bc, &abc]),
        c.clone() * bc.clone() * abc.clone(),
        ab.clone() * ac.clone() * sum(&[&bc, &abc]),
        ab.clone() * bc.clone() * abc.clone(),
        ac.clone() * bc.clone() * abc.clone(),
        a.clone() * sum(&[&b, &c, &ab, &ac, &bc, &abc]),
        b.clone() * sum(&[&c, &ab, &ac, &bc, &abc]),
        c.clone() * sum(&[&ab, &ac, &bc, &abc]),
        ab.clone() * sum(&[&ac, &bc, &abc]),
        ac.clone() * sum(&[&bc, &abc]),
        bc * abc,
    ];
    terms.into_iter().fold(R::zero(), |acc, t| acc + t)
}

/// One nonzero term of an identity difference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceTerm {
    pub monomial: Monomial,
    pub coefficient: String,
}

/// Outcome of one expand-and-compare identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymbolicIdentityReport {
    pub identity: String,
    pub kappa: i64,
    pub mode: ScalarMode,
    pub holds: bool,
    /// The part of a multi-part identity the difference belongs to, or extra findings.
    pub detail: Option<String>,
    pub difference: Vec<DifferenceTerm>,
}

impl SymbolicIdentityReport {
    pub fn first_failing_monomial(&self) -> Option<&DifferenceTerm> {
        self.difference.first()
    }
}

/// Accumulates the named parts of one identity; the first nonzero part decides.
pub(crate) struct IdentityCheck<C> {
    identity: String,
    kappa: i64,
    notes: Vec<String>,
    failure: Option<(String, LaurentPoly<C>)>,
}

impl<C: Scalar> IdentityCheck<C> {
    pub(crate) fn new(identity: impl Into<String>, kappa: i64) -> Self {
        Self {
            identity: identity.into(),
            kappa,
            notes: Vec::new(),
            failure: None,
        }
    }

    pub(crate) fn part(&mut self, label: impl Into<String>, difference: LaurentPoly<C>) {
        if self.failure.is_none() && !difference.is_empty() {
            self.failure = Some((label.into(), difference));
        }
    }

    pub(crate) fn equal(&mut self, label: &str, lhs: &LaurentPoly<C>, rhs: &LaurentPoly<C>) {
        self.part(label, lhs - rhs);
    }

    /// Coefficientwise comparison of two polynomials in `X`.
    pub(crate) fn equal_polys(&mut self, label: &str, lhs: &SymbolicPoly<C>, rhs: &SymbolicPoly<C>) {
        let n = lhs.coeffs().len().max(rhs.coeffs().len());
        for j in 0..n {
            self.part(format!("{label}, X^{j}"), &lhs.coeff(j) - &rhs.coeff(j));
        }
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn finish(self) -> SymbolicIdentityReport {
        let (holds, mut detail_parts, difference) = match self.failure {
            None => (true, Vec::new(), Vec::new()),
            Some((label, diff)) => {
                let terms = diff
                    .terms()
                    .map(|(m, c)| DifferenceTerm {
                        monomial: *m,
                        coefficient: c.to_string(),
                    })
                    .collect();
                (false, vec![format!("fails at {label}")], terms)
            }
        };
        detail_parts.extend(self.notes);
        SymbolicIdentityReport {
            identity: self.identity,
            kappa: self.kappa,
            mode: C::MODE,
            holds,
            detail: (!detail_parts.is_empty()).then(|| detail_parts.join("; ")),
            difference,
        }
    }
}
