//! Per-prime verification of the spinor and standard factorizations for the
//! lift of `Delta` and the weight-20 newform.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{
    andrianov_q, miyawaki_spin_eigenvalues, nonvanishing_inequality, p_power, spin_rhs, standard7_normalized_rhs,
    standard7_rhs,
};
use crate::arith::{to_integer, UniPoly};
use crate::primes::is_prime;
use crate::qexp::NewformTables;
use crate::satake::{
    check_rankin_closed_form, check_standard_renormalization, check_sym2_closed_form, standard_poly_symbolic,
    SatakeAssignment, TracePoly,
};
use crate::{Error, Result};

/// The only weight with concrete forms available: `Delta` and `g20`.
pub const VERIFIED_KAPPA: i64 = 12;

const WEIGHT_G: i64 = 2 * VERIFIED_KAPPA - 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenvalueRecord {
    #[serde(serialize_with = "crate::report::bigint")]
    pub a_delta: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub a_g20: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_p: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t1: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t2: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_t3: BigInt,
}

/// One prime's comparison of two coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeVerification {
    pub prime: u64,
    pub kappa: i64,
    #[serde(serialize_with = "crate::report::bigint_vec")]
    pub lhs: Vec<BigInt>,
    #[serde(serialize_with = "crate::report::bigint_vec")]
    pub rhs: Vec<BigInt>,
    pub equal: bool,
    pub eigenvalues: EigenvalueRecord,
    /// Standard factor only: whether the product with `St(f)` left in the
    /// arithmetic normalization also matches.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal_equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonvanishingRecord {
    pub prime: u64,
    #[serde(serialize_with = "crate::report::bigint")]
    pub a_delta: BigInt,
    #[serde(serialize_with = "crate::report::bigint")]
    pub lambda_p: BigInt,
    pub inequality: bool,
    pub holds: bool,
}

/// Confirms the closed-form Rankin, symmetric-square and renormalization
/// formulas symbolically before any numeric sweep relies on them.
pub fn ensure_closed_forms(kappa: i64) -> Result<()> {
    for report in [
        check_rankin_closed_form(kappa)?,
        check_sym2_closed_form(kappa)?,
        check_standard_renormalization(kappa)?,
    ] {
        if !report.holds {
            return Err(Error::ClosedFormMismatch(format!(
                "{} ({})",
                report.identity,
                report.detail.unwrap_or_default()
            )));
        }
    }
    Ok(())
}

fn forms_at(tables: &NewformTables, p: u64) -> Result<(BigInt, BigInt)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok((tables.delta.try_coeff(p)?.clone(), tables.g20.try_coeff(p)?.clone()))
}

fn eigenvalue_record(a_f: &BigInt, a_g: &BigInt, p: u64) -> Result<EigenvalueRecord> {
    let e = miyawaki_spin_eigenvalues(a_f, a_g, VERIFIED_KAPPA, p)?;
    Ok(EigenvalueRecord {
        a_delta: a_f.clone(),
        a_g20: a_g.clone(),
        lambda_p: e.lambda_p,
        lambda_t1: e.lambda_t1,
        lambda_t2: e.lambda_t2,
        lambda_t3: e.lambda_t3,
    })
}

pub fn eigenvalues_at_prime(tables: &NewformTables, p: u64) -> Result<EigenvalueRecord> {
    let (a_f, a_g) = forms_at(tables, p)?;
    eigenvalue_record(&a_f, &a_g, p)
}

/// Andrianov's degree-8 polynomial from the eigenvalue formulas against the
/// product `L(s-10, Delta) L(s-9, Delta) L(s, Delta x g20)`.
pub fn verify_spin_at_prime(tables: &NewformTables, p: u64) -> Result<PrimeVerification> {
    let (a_f, a_g) = forms_at(tables, p)?;
    let eigs = miyawaki_spin_eigenvalues(&a_f, &a_g, VERIFIED_KAPPA, p)?;
    let lhs = andrianov_q(&eigs)?.integer_coefficients()?;
    let rhs = spin_rhs(&a_f, &a_g, VERIFIED_KAPPA, p)?.integer_coefficients()?;
    Ok(PrimeVerification {
        prime: p,
        kappa: VERIFIED_KAPPA,
        equal: lhs == rhs,
        lhs,
        rhs,
        eigenvalues: eigenvalue_record(&a_f, &a_g, p)?,
        literal_equal: None,
    })
}

/// Coefficients of the unit-scale degree-7 standard polynomial, rewritten in
/// the traces `beta + 1/beta` and `alpha + 1/alpha`.
fn standard_traces() -> Result<&'static [TracePoly]> {
    static CACHE: OnceLock<std::result::Result<Vec<TracePoly>, Error>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let a = SatakeAssignment::new(VERIFIED_KAPPA, 1)?;
            let poly = standard_poly_symbolic(&a)?;
            poly.coeffs().iter().map(TracePoly::reduce).collect()
        })
        .as_deref()
        .map_err(Clone::clone)
}

fn scaled_integers(poly: &UniPoly<BigRational>, p: u64, degree: usize) -> Result<Vec<BigInt>> {
    let scaled = poly.scale_variable(&p_power(p, VERIFIED_KAPPA - 1));
    (0..=degree).map(|j| to_integer(&scaled.coeff(j))).collect()
}

/// Degree-7 standard factor from the Satake multiset against
/// `St(Delta) L(s+10, g20) L(s+9, g20)`.
///
/// Both sides are compared in arithmetic coordinates `X -> p^{kappa-1} X`,
/// where they are integral. `literal_equal` records whether the product with
/// the symmetric square left unnormalized matches as well.
pub fn verify_standard_at_prime(tables: &NewformTables, p: u64) -> Result<PrimeVerification> {
    let (a_f, a_g) = forms_at(tables, p)?;
    let traces = standard_traces()?;
    let lhs_norm = UniPoly::new(
        traces
            .iter()
            .map(|t| t.evaluate(&a_f, VERIFIED_KAPPA, &a_g, WEIGHT_G, p))
            .collect::<Result<Vec<_>>>()?,
    );
    let rhs_norm = standard7_normalized_rhs(&a_f, &a_g, VERIFIED_KAPPA, p)?.poly;
    let literal = standard7_rhs(&a_f, &a_g, VERIFIED_KAPPA, p)?.poly;
    let lhs = scaled_integers(&lhs_norm, p, 7)?;
    let rhs = scaled_integers(&rhs_norm, p, 7)?;
    Ok(PrimeVerification {
        prime: p,
        kappa: VERIFIED_KAPPA,
        equal: lhs == rhs && lhs_norm == rhs_norm,
        lhs,
        rhs,
        eigenvalues: eigenvalue_record(&a_f, &a_g, p)?,
        literal_equal: Some(literal == lhs_norm),
    })
}

/// `lambda(p) = 0` iff `a_Delta(p) = 0`, with the supporting inequality.
pub fn nonvanishing_at_prime(tables: &NewformTables, p: u64) -> Result<NonvanishingRecord> {
    let (a_f, a_g) = forms_at(tables, p)?;
    let eigs = miyawaki_spin_eigenvalues(&a_f, &a_g, VERIFIED_KAPPA, p)?;
    let inequality = nonvanishing_inequality(p, WEIGHT_G);
    let holds = inequality && (eigs.lambda_p.is_zero() == a_f.is_zero());
    Ok(NonvanishingRecord {
        prime: p,
        a_delta: a_f,
        lambda_p: eigs.lambda_p,
        inequality,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables() -> NewformTables {
        NewformTables::new(30).unwrap()
    }

    #[test]
    fn closed_forms_pass() {
        ensure_closed_forms(12).unwrap();
    }

    #[test]
    fn spin_at_small_primes() {
        let t = tables();
        for p in [2, 3, 5, 7] {
            let r = verify_spin_at_prime(&t, p).unwrap();
            assert!(r.equal, "p={p}");
            assert_eq!(r.lhs.len(), 9);
        }
        let r = verify_spin_at_prime(&t, 2).unwrap();
        assert_eq!(r.eigenvalues.lambda_p, BigInt::from(-47808));
        assert_eq!(r.lhs[1], BigInt::from(47808));
    }

    #[test]
    fn errors() {
        let t = tables();
        assert_eq!(verify_spin_at_prime(&t, 4), Err(Error::NotPrime(4)));
        assert!(matches!(
            verify_spin_at_prime(&t, 31),
            Err(Error::InsufficientLength { needed: 31, .. })
        ));
        assert!(matches!(
            verify_standard_at_prime(&t, 37),
            Err(Error::InsufficientLength { .. })
        ));
    }

    #[test]
    fn standard_at_small_primes() {
        let t = tables();
        for p in [2, 3, 5] {
            let r = verify_standard_at_prime(&t, p).unwrap();
            assert!(r.equal, "p={p}: {r:?}");
            assert_eq!(r.lhs.len(), 8);
            assert_eq!(r.lhs[0], BigInt::from(1));
            assert_eq!(r.literal_equal, Some(false));
        }
    }

    #[test]
    fn json_schema() {
        let r = verify_spin_at_prime(&tables(), 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["eigenvalues", "equal", "kappa", "lhs", "prime", "rhs"]);
        assert_eq!(v["lhs"][1], 47808);
        assert_eq!(v["lhs"][8], "1329227995784915872903807060280344576");
    }

    #[test]
    fn nonvanishing_at_two() {
        let r = nonvanishing_at_prime(&tables(), 2).unwrap();
        assert!(r.holds && r.inequality);
    }
}
