use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use spinor_lfactor::local::{
    eigenvalues_at_prime, ensure_closed_forms, hecke_local, rankin_local, standard7_rhs, verify_spin_at_prime,
    verify_standard_at_prime, EigenvalueRecord, PrimeVerification, VERIFIED_KAPPA,
};
use spinor_lfactor::primes::{is_prime, primes_up_to};
use spinor_lfactor::qexp::{delta_qexp, g20_qexp, NewformTables};
use spinor_lfactor::satake::{identity_suite, SymbolicIdentityReport};

use crate::config::{Format, RunConfig};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad configuration or input: exit code 2.
    Config(String),
    /// A checked identity failed: exit code 1.
    Mismatch,
}

impl From<spinor_lfactor::Error> for Failure {
    fn from(e: spinor_lfactor::Error) -> Self {
        match e {
            spinor_lfactor::Error::ClosedFormMismatch(msg) => {
                eprintln!("error: {msg}");
                Failure::Mismatch
            }
            other => Failure::Config(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(format!("i/o error: {e}"))
    }
}

pub type Outcome = Result<(), Failure>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Spin,
    Standard,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Spin => "spin",
            Identity::Standard => "standard",
        }
    }
}

#[derive(Debug, Serialize)]
struct Summary {
    primes_checked: usize,
    failures: usize,
    failing_primes: Vec<u64>,
}

#[derive(Debug, Serialize)]
struct VerificationReport {
    identity: &'static str,
    kappa: i64,
    max_prime: u64,
    records: Vec<PrimeVerification>,
    summary: Summary,
}

fn emit(out: Option<&Path>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn rational_value(r: &BigRational) -> Value {
    if r.is_integer() {
        let n = r.to_integer();
        match i64::try_from(&n) {
            Ok(small) => Value::from(small),
            Err(_) => Value::from(n.to_string()),
        }
    } else {
        Value::from(r.to_string())
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Config(format!("cannot start worker pool: {e}")))
}

fn require_verified_kappa(config: &RunConfig) -> Outcome {
    match config.kappa_list.as_slice() {
        [VERIFIED_KAPPA] => Ok(()),
        other => Err(Failure::Config(format!(
            "numeric sweeps need kappa = {VERIFIED_KAPPA} (the forms are Delta and g20), got {other:?}"
        ))),
    }
}

fn verification_csv(records: &[PrimeVerification]) -> String {
    let width = records.first().map_or(0, |r| r.lhs.len());
    let mut header = vec!["prime".to_string(), "kappa".into(), "equal".into()];
    header.extend((0..width).map(|j| format!("lhs_{j}")));
    header.extend((0..width).map(|j| format!("rhs_{j}")));
    let mut out = header.join(",") + "\n";
    for r in records {
        out += &format!(
            "{},{},{},{},{}\n",
            r.prime,
            r.kappa,
            r.equal,
            join(&r.lhs),
            join(&r.rhs)
        );
    }
    out
}

/// Runs one identity over every prime up to `max_prime`.
pub fn verify(config: &RunConfig, identity: Identity) -> Outcome {
    require_verified_kappa(config)?;
    let start = Instant::now();
    ensure_closed_forms(VERIFIED_KAPPA)?;
    let tables = NewformTables::new(config.series_length)?;
    let primes = primes_up_to(config.max_prime);
    let check = match identity {
        Identity::Spin => verify_spin_at_prime,
        Identity::Standard => verify_standard_at_prime,
    };
    let mut records = pool(config.jobs)?.install(|| {
        primes
            .par_iter()
            .map(|&p| check(&tables, p))
            .collect::<Result<Vec<_>, _>>()
    })?;
    records.sort_by_key(|r| r.prime);

    let failing_primes: Vec<u64> = records.iter().filter(|r| !r.equal).map(|r| r.prime).collect();
    let report = VerificationReport {
        identity: identity.name(),
        kappa: VERIFIED_KAPPA,
        max_prime: config.max_prime,
        summary: Summary {
            primes_checked: records.len(),
            failures: failing_primes.len(),
            failing_primes: failing_primes.clone(),
        },
        records,
    };
    let text = match config.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report),
        Format::Csv => verification_csv(&report.records),
    };
    emit(config.out.as_deref(), &text)?;
    eprintln!(
        "{} factorization: {} primes, {} failures, {:.3}s",
        identity.name(),
        report.summary.primes_checked,
        report.summary.failures,
        start.elapsed().as_secs_f64()
    );
    if failing_primes.is_empty() {
        Ok(())
    } else {
        eprintln!("mismatch at primes {failing_primes:?}");
        Err(Failure::Mismatch)
    }
}

#[derive(Debug, Serialize)]
struct SymbolicSummary {
    identities: usize,
    failures: usize,
}

#[derive(Debug, Serialize)]
struct SymbolicOutput<'a> {
    reports: &'a [SymbolicIdentityReport],
    summary: SymbolicSummary,
}

fn describe(r: &SymbolicIdentityReport) -> String {
    let status = if r.holds { "PASS" } else { "FAIL" };
    let mut line = format!("{status} kappa={} {} [{}]", r.kappa, r.identity, r.mode.as_str());
    if let Some(detail) = &r.detail {
        line += &format!(": {detail}");
    }
    if let Some(t) = r.first_failing_monomial() {
        line += &format!(" (first nonzero term {} * {})", t.coefficient, t.monomial);
    }
    line
}

/// Every symbolic identity for each weight in the list.
pub fn symbolic(config: &RunConfig, json: bool) -> Outcome {
    let start = Instant::now();
    let mut reports = Vec::new();
    for &kappa in &config.kappa_list {
        reports.extend(identity_suite(kappa)?);
    }
    let failures = reports.iter().filter(|r| !r.holds).count();
    let text = if json || config.format == Some(Format::Json) {
        to_json(&SymbolicOutput {
            reports: &reports,
            summary: SymbolicSummary {
                identities: reports.len(),
                failures,
            },
        })
    } else {
        let mut s: String = reports.iter().map(|r| describe(r) + "\n").collect();
        s += &format!("{} identities, {failures} failures\n", reports.len());
        s
    };
    emit(config.out.as_deref(), &text)?;
    eprintln!("symbolic suite: {:.3}s", start.elapsed().as_secs_f64());
    for r in reports.iter().filter(|r| !r.holds) {
        eprintln!("{}", describe(r));
    }
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Form {
    Delta,
    G20,
}

/// `n,a(n)` for `n = 0..=N`.
pub fn qexp(form: Form, n: usize, out: Option<&Path>) -> Outcome {
    if n < 1 {
        return Err(Failure::Config("N must be at least 1".into()));
    }
    let series = match form {
        Form::Delta => delta_qexp(n)?,
        Form::G20 => g20_qexp(n)?,
    };
    let mut text = String::from("n,a(n)\n");
    for (i, c) in series.coeffs().iter().enumerate() {
        text += &format!("{i},{c}\n");
    }
    emit(out, &text)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FactorKind {
    Spin,
    Standard,
    Hecke,
    Rankin,
}

#[derive(Serialize)]
struct Tagged<T: Serialize> {
    kind: &'static str,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct StandardEuler {
    #[serde(flatten)]
    record: PrimeVerification,
    /// Product with `St(Delta)` left in the arithmetic normalization.
    literal_rhs: Vec<Value>,
}

#[derive(Serialize)]
struct HeckeEuler {
    prime: u64,
    delta: Vec<Value>,
    g20: Vec<Value>,
}

#[derive(Serialize)]
struct RankinEuler {
    prime: u64,
    coefficients: Vec<Value>,
}

/// One local factor at `p` as JSON.
pub fn euler(p: u64, kind: FactorKind, out: Option<&Path>) -> Outcome {
    if !is_prime(p) {
        return Err(Failure::Config(format!("{p} is not prime")));
    }
    let tables = NewformTables::new(p as usize)?;
    let a_f = tables.delta.try_coeff(p)?.clone();
    let a_g = tables.g20.try_coeff(p)?.clone();
    let values = |v: &[BigRational]| v.iter().map(rational_value).collect::<Vec<_>>();
    let (text, equal) = match kind {
        FactorKind::Spin => {
            let record = verify_spin_at_prime(&tables, p)?;
            let equal = record.equal;
            (
                to_json(&Tagged {
                    kind: "spin",
                    body: record,
                }),
                equal,
            )
        }
        FactorKind::Standard => {
            let record = verify_standard_at_prime(&tables, p)?;
            let equal = record.equal;
            let literal = standard7_rhs(&a_f, &a_g, VERIFIED_KAPPA, p)?;
            let body = StandardEuler {
                record,
                literal_rhs: values(&literal.padded()),
            };
            (to_json(&Tagged { kind: "standard", body }), equal)
        }
        FactorKind::Hecke => {
            let body = HeckeEuler {
                prime: p,
                delta: values(&hecke_local(&a_f, VERIFIED_KAPPA, p, 0).padded()),
                g20: values(&hecke_local(&a_g, 2 * VERIFIED_KAPPA - 4, p, 0).padded()),
            };
            (to_json(&Tagged { kind: "hecke", body }), true)
        }
        FactorKind::Rankin => {
            let factor = rankin_local(&a_f, VERIFIED_KAPPA, &a_g, 2 * VERIFIED_KAPPA - 4, p)?;
            let body = RankinEuler {
                prime: p,
                coefficients: values(&factor.padded()),
            };
            (to_json(&Tagged { kind: "rankin", body }), true)
        }
    };
    emit(out, &text)?;
    if equal {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

#[derive(Serialize)]
struct EigenvalueRow {
    prime: u64,
    #[serde(flatten)]
    values: EigenvalueRecord,
}

/// Eigenvalue table for every prime up to `max_prime`.
pub fn export(config: &RunConfig) -> Outcome {
    require_verified_kappa(config)?;
    let tables = NewformTables::new(config.series_length)?;
    let primes = primes_up_to(config.max_prime);
    let rows = pool(config.jobs)?.install(|| {
        primes
            .par_iter()
            .map(|&p| eigenvalues_at_prime(&tables, p).map(|values| EigenvalueRow { prime: p, values }))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let text = match config.format.unwrap_or(Format::Csv) {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("p,a_delta,a_g20,lambda_p,lambda_t1,lambda_t2,lambda_t3\n");
            for r in &rows {
                let v = &r.values;
                let cells: [&BigInt; 6] = [
                    &v.a_delta,
                    &v.a_g20,
                    &v.lambda_p,
                    &v.lambda_t1,
                    &v.lambda_t2,
                    &v.lambda_t3,
                ];
                s += &format!("{},{}\n", r.prime, join(&cells));
            }
            s
        }
    };
    emit(config.out.as_deref(), &text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        let mismatch = Failure::from(spinor_lfactor::Error::ClosedFormMismatch("rankin".into()));
        assert!(matches!(mismatch, Failure::Mismatch));
        let config = Failure::from(spinor_lfactor::Error::NotPrime(4));
        assert!(matches!(config, Failure::Config(msg) if msg.contains("not prime")));
    }

    #[test]
    fn csv_rows_have_fixed_width() {
        let tables = NewformTables::new(4).unwrap();
        let records = vec![
            verify_spin_at_prime(&tables, 2).unwrap(),
            verify_spin_at_prime(&tables, 3).unwrap(),
        ];
        let csv = verification_csv(&records);
        let widths: Vec<_> = csv.lines().map(|l| l.split(',').count()).collect();
        assert_eq!(widths, vec![21, 21, 21]);
    }

    #[test]
    fn rationals_render_losslessly() {
        assert_eq!(rational_value(&BigRational::new(3.into(), 1.into())), Value::from(3));
        assert_eq!(
            rational_value(&BigRational::new(3.into(), 4.into())),
            Value::from("3/4")
        );
        let big = BigRational::from_integer(BigInt::from(2).pow(70u32));
        assert_eq!(rational_value(&big), Value::from("1180591620717411303424"));
    }
}
