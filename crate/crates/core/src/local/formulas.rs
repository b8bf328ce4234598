//! Closed-form local factors and eigenvalue formulas, generic over the
//! coefficient ring.
//!
//! The same code runs numerically (over the rationals, with `p` an integer)
//! and symbolically (over the Laurent ring, with `p = q^2` and the Fourier
//! coefficients written through Satake parameters).

use crate::arith::{PrimePowers, Ring, UniPoly};

/// Hecke eigenvalues of a degree-3 eigenform at one prime.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeEigenvalues<R> {
    pub lambda_p: R,
    pub lambda_t1: R,
    pub lambda_t2: R,
    pub lambda_t3: R,
}

fn int<R: Ring>(n: i64) -> R {
    R::from_i64(n)
}

/// `1 - a_p p^s X + p^{k-1+2s} X^2`, the Hecke factor of `L(s - shift, f)`.
pub fn hecke_poly<R: Ring>(a_p: &R, k: i64, shift: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    UniPoly::new(vec![
        R::one(),
        -(a_p.clone() * pw.pow(shift)),
        pw.pow(k - 1 + 2 * shift),
    ])
}

/// Degree-4 factor of the Rankin convolution of weights `k1` and `k2`.
pub fn rankin_poly<R: Ring>(a_f: &R, k1: i64, a_g: &R, k2: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let fg = a_f.clone() * a_g.clone();
    let w = k1 + k2 - 2;
    let middle = a_f.clone() * a_f.clone() * pw.pow(k2 - 1) + a_g.clone() * a_g.clone() * pw.pow(k1 - 1)
        - int::<R>(2) * pw.pow(w);
    UniPoly::new(vec![R::one(), -fg.clone(), middle, -(fg * pw.pow(w)), pw.pow(2 * w)])
}

/// Degree-3 symmetric-square factor in the arithmetic normalization
/// (eigenvalues `p^{k-1} {beta^2, 1, beta^-2}`).
pub fn sym2_poly<R: Ring>(a_p: &R, k: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let e1 = a_p.clone() * a_p.clone() - pw.pow(k - 1);
    UniPoly::new(vec![R::one(), -e1.clone(), pw.pow(k - 1) * e1, -pw.pow(3 * (k - 1))])
}

/// `1 - T(p) X + p T_1(p^2) X^2`.
pub fn genus1_poly<R: Ring>(lambda_p: &R, lambda_t1: &R, pw: &PrimePowers<R>) -> UniPoly<R> {
    UniPoly::new(vec![R::one(), -lambda_p.clone(), pw.pow(1) * lambda_t1.clone()])
}

/// Degree-4 genus-2 denominator, term by term as written:
/// `1 - T(p)X + (T(p)^2 + p(p^2+1)T_2(p^2))X^2 - p^3 T(p) T_2(p^2) X^3 + p^6 T_2(p^2)^2 X^4`.
pub fn genus2_poly<R: Ring>(lambda_p: &R, lambda_t2: &R, pw: &PrimePowers<R>) -> UniPoly<R> {
    let p = pw.pow(1);
    let x2 = lambda_p.clone() * lambda_p.clone() + p * (pw.pow(2) + R::one()) * lambda_t2.clone();
    UniPoly::new(vec![
        R::one(),
        -lambda_p.clone(),
        x2,
        -(pw.pow(3) * lambda_p.clone() * lambda_t2.clone()),
        pw.pow(6) * lambda_t2.clone() * lambda_t2.clone(),
    ])
}

/// The four eigenvalues of the degree-3 lift of `f` (weight `kappa`) and
/// `g` (weight `2 kappa - 4`), in terms of their Fourier coefficients at `p`.
pub fn miyawaki_eigenvalues<R: Ring>(a_f: &R, a_g: &R, kappa: i64, pw: &PrimePowers<R>) -> HeckeEigenvalues<R> {
    let k1 = kappa;
    let k2 = 2 * kappa - 4;
    let half = k2 / 2;
    let p = || pw.pow(1);
    let one = R::one;
    let af2 = a_f.clone() * a_f.clone();
    let t3 = pw.pow(3 * kappa - 12);

    let lambda_p = a_f.clone() * (a_g.clone() + pw.pow(half) + pw.pow(half - 1));

    let lambda_t2 = af2.clone() * pw.pow(k2 - 4) + a_g.clone() * pw.pow(k1 + half - 5) * (p() + one())
        - t3.clone() * (pw.pow(3) + one());

    let lambda_t1 = af2.clone() * a_g.clone() * pw.pow(half - 2) * (p() + one())
        + af2 * pw.pow(k2 - 4) * (pw.pow(2) - one())
        + a_g.clone() * a_g.clone() * pw.pow(k1 - 2)
        - a_g.clone() * pw.pow(k1 + half - 5) * (pw.pow(2) + one()) * (p() + one())
        + pw.pow(3 * kappa - 10) * (pw.pow(3) + one()) * (p() - one());

    HeckeEigenvalues {
        lambda_p,
        lambda_t1,
        lambda_t2,
        lambda_t3: t3,
    }
}

/// `c(0), ..., c(8)` of the genus-3 denominator with operators replaced by eigenvalues.
pub fn andrianov_coefficients<R: Ring>(e: &HeckeEigenvalues<R>, pw: &PrimePowers<R>) -> [R; 9] {
    let p = pw.pow(1);
    let one = R::one;
    let p2_plus_1 = pw.pow(2) + one();
    let (t, t1, t2, t3) = (&e.lambda_p, &e.lambda_t1, &e.lambda_t2, &e.lambda_t3);

    let c0 = one();
    let c1 = t.clone();
    let c2 = p.clone() * (t1.clone() + p2_plus_1.clone() * t2.clone() + p2_plus_1.clone() * p2_plus_1 * t3.clone());
    let c3 = pw.pow(3) * t.clone() * (t2.clone() + t3.clone());
    let poly_t3sq = pw.pow(6) + int::<R>(2) * pw.pow(5) + int::<R>(2) * pw.pow(3) + int::<R>(2) * p.clone() - one();
    let c4 = pw.pow(6)
        * (t.clone() * t.clone() * t3.clone() + t2.clone() * t2.clone()
            - int::<R>(2) * p.clone() * t1.clone() * t3.clone()
            - int::<R>(2) * (p - one()) * t2.clone() * t3.clone()
            - poly_t3sq * t3.clone() * t3.clone());
    let c5 = pw.pow(6) * t3.clone() * c3.clone();
    let c6 = pw.pow(12) * t3.clone() * t3.clone() * c2.clone();
    let c7 = pw.pow(18) * t3.clone() * t3.clone() * t3.clone() * c1.clone();
    let c8 = pw.pow(24) * t3.clone() * t3.clone() * t3.clone() * t3.clone();
    [c0, c1, c2, c3, c4, c5, c6, c7, c8]
}

/// `sum_m (-1)^m c(m) X^m`.
pub fn andrianov_poly<R: Ring>(e: &HeckeEigenvalues<R>, pw: &PrimePowers<R>) -> UniPoly<R> {
    let c = andrianov_coefficients(e, pw);
    UniPoly::new(
        c.into_iter()
            .enumerate()
            .map(|(m, cm)| if m % 2 == 0 { cm } else { -cm })
            .collect(),
    )
}

/// `L(s - kappa + 2, f) L(s - kappa + 3, f) L(s, f x g)` as a denominator polynomial.
pub fn spin_rhs_poly<R: Ring>(a_f: &R, a_g: &R, kappa: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let h1 = hecke_poly(a_f, kappa, kappa - 2, pw);
    let h2 = hecke_poly(a_f, kappa, kappa - 3, pw);
    let r = rankin_poly(a_f, kappa, a_g, 2 * kappa - 4, pw);
    &(&h1 * &h2) * &r
}

/// The degree-7 product with the symmetric square in arithmetic normalization
/// and the two `g`-factors shifted by `-(kappa-2)` and `-(kappa-3)`.
pub fn standard7_literal_poly<R: Ring>(a_f: &R, a_g: &R, kappa: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let k2 = 2 * kappa - 4;
    let s = sym2_poly(a_f, kappa, pw);
    let g1 = hecke_poly(a_g, k2, -(kappa - 2), pw);
    let g2 = hecke_poly(a_g, k2, -(kappa - 3), pw);
    &(&s * &g1) * &g2
}

/// Same product with the symmetric square renormalized by `X -> p^{-(kappa-1)} X`,
/// i.e. with unit-scale eigenvalues `{beta^2, 1, beta^-2}`.
pub fn standard7_normalized_poly<R: Ring>(a_f: &R, a_g: &R, kappa: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let k2 = 2 * kappa - 4;
    let s = sym2_poly(a_f, kappa, pw).scale_variable(&pw.pow(-(kappa - 1)));
    let g1 = hecke_poly(a_g, k2, -(kappa - 2), pw);
    let g2 = hecke_poly(a_g, k2, -(kappa - 3), pw);
    &(&s * &g1) * &g2
}

/// `(1 - X) prod_{j=1}^{2m} H_g(p^{-(k+m-j)} X)` for `g` of weight `2k`.
pub fn ikeda_standard_poly<R: Ring>(a_g: &R, k: i64, m: i64, pw: &PrimePowers<R>) -> UniPoly<R> {
    let mut acc = UniPoly::linear_factor(R::one());
    for j in 1..=2 * m {
        acc = &acc * &hecke_poly(a_g, 2 * k, -(k + m - j), pw);
    }
    acc
}
