use num_bigint::BigInt;
use num_rational::BigRational;
use spinor_lfactor::local::{andrianov_q, miyawaki_spin_eigenvalues, spin_rhs, verify_spin_at_prime};
use spinor_lfactor::qexp::NewformTables;
use spinor_lfactor::satake::{spin_poly_symbolic, SatakeAssignment, TracePoly};

fn big(s: &str) -> BigInt {
    s.parse().unwrap()
}

#[test]
fn symbolic_spin_polynomial_evaluates_to_numeric_factor() {
    let tables = NewformTables::new(10).unwrap();
    let symbolic = spin_poly_symbolic(&SatakeAssignment::<BigRational>::new(12, 1).unwrap());
    let traces: Vec<_> = symbolic
        .coeffs()
        .iter()
        .map(|c| TracePoly::reduce(c).unwrap())
        .collect();
    for p in [2u64, 3, 5] {
        let a_f = tables.delta.try_coeff(p).unwrap();
        let a_g = tables.g20.try_coeff(p).unwrap();
        let numeric = andrianov_q(&miyawaki_spin_eigenvalues(a_f, a_g, 12, p).unwrap()).unwrap();
        for (j, t) in traces.iter().enumerate() {
            let value = t.evaluate(a_f, 12, a_g, 20, p).unwrap();
            assert_eq!(value, numeric.coefficients()[j], "p={p}, X^{j}");
        }
    }
}

#[test]
fn frozen_eigenvalues_at_three_and_five() {
    let tables = NewformTables::new(10).unwrap();
    let r = verify_spin_at_prime(&tables, 3).unwrap();
    assert!(r.equal);
    assert_eq!(r.eigenvalues.a_delta, BigInt::from(252));
    assert_eq!(r.eigenvalues.a_g20, BigInt::from(50652));
    assert_eq!(r.eigenvalues.lambda_p, BigInt::from(32604768));
    assert_eq!(r.eigenvalues.lambda_t1, big("138479464796904"));
    assert_eq!(r.eigenvalues.lambda_t2, big("20990442094020"));
    assert_eq!(r.eigenvalues.lambda_t3, big("282429536481"));
    assert_eq!(
        r.lhs[..3],
        [BigInt::from(1), BigInt::from(-32604768), big("1129880518155612")]
    );

    let r5 = verify_spin_at_prime(&tables, 5).unwrap();
    assert!(r5.equal);
    assert_eq!(r5.eigenvalues.lambda_p, big("45118672200"));
}

#[test]
fn miyawaki_primes_two_and_three() {
    let tables = NewformTables::new(4).unwrap();
    for p in [2, 3] {
        let a_f = tables.delta.try_coeff(p).unwrap();
        let a_g = tables.g20.try_coeff(p).unwrap();
        let rhs = spin_rhs(a_f, a_g, 12, p).unwrap();
        assert_eq!(rhs.degree(), 8);
        assert!(rhs.is_integral());
    }
}
