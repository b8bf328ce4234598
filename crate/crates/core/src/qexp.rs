//! Exact q-expansions of the level-one forms E4, E6, Delta and the weight-20
//! newform, plus the checks certifying that the cusp forms are normalized
//! Hecke eigenforms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::primes::{prime_power, primes_up_to};
use crate::{Error, Result};

/// Truncated q-expansion `sum_{n=0}^{N} a(n) q^n` of a modular form of the given weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    weight: u32,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn new(weight: u32, coeffs: Vec<BigInt>) -> Self {
        Self { weight, coeffs }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Largest index `N` with a known coefficient.
    pub fn precision(&self) -> u64 {
        self.coeffs.len().saturating_sub(1) as u64
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: u64) -> Option<&BigInt> {
        self.coeffs.get(n as usize)
    }

    /// `a(n)`, or `InsufficientLength` if `n` lies beyond the truncation.
    pub fn try_coeff(&self, n: u64) -> Result<&BigInt> {
        self.coeff(n).ok_or(Error::InsufficientLength {
            needed: n,
            available: self.precision(),
        })
    }

    /// Product truncated to the shorter precision; weights add.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.weight + other.weight, out)
    }

    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.weight, other.weight);
        let out = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Self::new(self.weight, out)
    }

    /// Exact division of every coefficient.
    fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (index, a) in self.coeffs.iter().enumerate() {
            let (quot, rem) = a.div_rem(d);
            if !rem.is_zero() {
                return Err(Error::InexactDivision {
                    divisor: d.clone(),
                    index,
                });
            }
            out.push(quot);
        }
        Ok(Self::new(self.weight, out))
    }
}

/// `sigma_k(n) = sum_{d | n} d^k`.
pub fn divisor_sum(n: u64, k: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Undefined);
    }
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// `sigma_k(n)` for all `0 <= n <= len` (index 0 holds 0).
fn divisor_sums(len: usize, k: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len + 1];
    for d in 1..=len {
        let dk = BigInt::from(d).pow(k);
        for m in (d..=len).step_by(d) {
            out[m] += &dk;
        }
    }
    out
}

/// `E4 = 1 + 240 sum sigma_3(n) q^n` or `E6 = 1 - 504 sum sigma_5(n) q^n` up to `q^len`.
pub fn eisenstein_qexp(k: u32, len: usize) -> Result<QSeries> {
    let (scale, power) = match k {
        4 => (BigInt::from(240), 3),
        6 => (BigInt::from(-504), 5),
        _ => return Err(Error::UnsupportedWeight(k)),
    };
    let mut coeffs = divisor_sums(len, power);
    coeffs[0] = BigInt::one();
    for c in coeffs.iter_mut().skip(1) {
        *c *= &scale;
    }
    Ok(QSeries::new(k, coeffs))
}

fn require_length(len: usize) -> Result<()> {
    if len == 0 {
        Err(Error::InvalidParameter("q-expansion length must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Ramanujan's `Delta = (E4^3 - E6^2) / 1728` up to `q^len`.
pub fn delta_qexp(len: usize) -> Result<QSeries> {
    require_length(len)?;
    let e4 = eisenstein_qexp(4, len)?;
    let e6 = eisenstein_qexp(6, len)?;
    let e4_cubed = e4.mul(&e4).mul(&e4);
    let e6_squared = e6.mul(&e6);
    let mut diff = e4_cubed.sub(&e6_squared);
    diff.weight = 12;
    diff.div_exact(&BigInt::from(1728))
}

/// The normalized weight-20 cusp form `Delta * E4^2` up to `q^len`.
pub fn g20_qexp(len: usize) -> Result<QSeries> {
    require_length(len)?;
    let e4 = eisenstein_qexp(4, len)?;
    let f = delta_qexp(len)?.mul(&e4.mul(&e4));
    let lead = f.coeffs[1].clone();
    f.div_exact(&lead)
}

/// The two newforms consumed by the verification, built once and shared.
#[derive(Debug, Clone)]
pub struct NewformTables {
    pub delta: QSeries,
    pub g20: QSeries,
}

impl NewformTables {
    pub fn new(len: usize) -> Result<Self> {
        Ok(Self {
            delta: delta_qexp(len)?,
            g20: g20_qexp(len)?,
        })
    }

    pub fn precision(&self) -> u64 {
        self.delta.precision().min(self.g20.precision())
    }
}

/// First place where the Hecke relations fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HeckeViolation {
    /// `a(mn) != a(m) a(n)` for coprime `m < n`.
    Coprime { m: u64, n: u64 },
    /// `a(p^{r+1}) != a(p) a(p^r) - p^{k-1} a(p^{r-1})`.
    PrimePower { p: u64, r: u32 },
    /// `a(1) != 1`.
    NotNormalized,
}

impl fmt::Display for HeckeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Coprime { m, n } => write!(f, "a({m}*{n}) != a({m}) a({n})"),
            Self::PrimePower { p, r } => write!(f, "prime-power recursion fails at p={p}, r={r}"),
            Self::NotNormalized => write!(f, "a(1) != 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicativityReport {
    pub bound: u64,
    pub holds: bool,
    pub first_violation: Option<HeckeViolation>,
}

/// Checks coprime multiplicativity for all `mn <= bound`, then the prime-power
/// recursion for all `p^{r+1} <= bound`.
pub fn check_hecke_multiplicativity(s: &QSeries, bound: u64) -> Result<MultiplicativityReport> {
    s.try_coeff(bound)?;
    let a = |n: u64| &s.coeffs[n as usize];
    let fail = |v| MultiplicativityReport {
        bound,
        holds: false,
        first_violation: Some(v),
    };
    if bound >= 1 && !a(1).is_one() {
        return Ok(fail(HeckeViolation::NotNormalized));
    }
    for t in 2..=bound {
        let mut m = 2;
        while m * m < t {
            if t % m == 0 {
                let n = t / m;
                if m.gcd(&n) == 1 && *a(t) != a(m) * a(n) {
                    return Ok(fail(HeckeViolation::Coprime { m, n }));
                }
            }
            m += 1;
        }
    }
    let weight_term = s.weight.saturating_sub(1);
    for t in 4..=bound {
        let Some((p, e)) = prime_power(t) else { continue };
        if e < 2 {
            continue;
        }
        let r = e - 1;
        let pk = BigInt::from(p).pow(weight_term);
        let expected = a(p) * a(t / p) - pk * a(t / (p * p));
        if *a(t) != expected {
            return Ok(fail(HeckeViolation::PrimePower { p, r }));
        }
    }
    Ok(MultiplicativityReport {
        bound,
        holds: true,
        first_violation: None,
    })
}

/// `a(p)^2 <= 4 p^{k-1}` for every prime `p <= bound`, kept in integers.
pub fn ramanujan_bound_check(s: &QSeries, bound: u64) -> Result<bool> {
    for p in primes_up_to(bound) {
        let ap = s.try_coeff(p)?;
        let limit = BigInt::from(4) * BigInt::from(p).pow(s.weight - 1);
        if ap * ap > limit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First `n <= bound` with `a(n) != sigma_11(n) mod 691`, if any.
pub fn congruence_691_violation(delta: &QSeries, bound: u64) -> Result<Option<u64>> {
    let modulus = BigInt::from(691);
    for n in 1..=bound {
        let a = delta.try_coeff(n)?;
        let diff = a - divisor_sum(n, 11)?;
        if !diff.mod_floor(&modulus).is_zero() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
