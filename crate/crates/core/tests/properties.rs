use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use proptest::prelude::*;
use spinor_lfactor::local::{andrianov_q, hecke_local, miyawaki_spin_eigenvalues, rankin_local, spin_rhs, sym2_local};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn setup() -> impl Strategy<Value = (i64, i64, u64, i64)> {
    (
        -10_000i64..10_000,
        -10_000i64..10_000,
        prop::sample::select(&PRIMES[..]),
        prop::sample::select(&[12i64, 14, 16, 20][..]),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // The factorization is a polynomial identity in a_f, a_g and p.
    #[test]
    fn spin_identity_for_arbitrary_coefficients((af, ag, p, kappa) in setup()) {
        let (af, ag) = (BigInt::from(af), BigInt::from(ag));
        let e = miyawaki_spin_eigenvalues(&af, &ag, kappa, p).unwrap();
        let lhs = andrianov_q(&e).unwrap();
        let rhs = spin_rhs(&af, &ag, kappa, p).unwrap();
        prop_assert_eq!(&lhs.poly, &rhs.poly);
        prop_assert!(rhs.is_integral());
        prop_assert_eq!(-rhs.coefficients()[1].clone(), BigRational::from_integer(e.lambda_p.clone()));
        prop_assert_eq!(e.lambda_t3, Pow::pow(&BigInt::from(p), (3 * kappa - 12) as u32));
    }

    #[test]
    fn spin_palindrome((af, ag, p, kappa) in setup()) {
        let rhs = spin_rhs(&BigInt::from(af), &BigInt::from(ag), kappa, p).unwrap();
        let c = rhs.padded();
        let pb = BigRational::from_integer(BigInt::from(p));
        for m in 0..=4usize {
            let scale = Pow::pow(&pb, ((3 * kappa - 6) * (4 - m as i64)) as u32);
            prop_assert_eq!(&c[8 - m], &(&c[m] * scale));
        }
    }

    #[test]
    fn rankin_is_self_dual((af, ag, p, kappa) in setup()) {
        let k2 = 2 * kappa - 4;
        let r = rankin_local(&BigInt::from(af), kappa, &BigInt::from(ag), k2, p).unwrap();
        let c = r.padded();
        let w = BigRational::from_integer(Pow::pow(&BigInt::from(p), (kappa + k2 - 2) as u32));
        prop_assert_eq!(&c[3], &(&c[1] * &w));
        prop_assert_eq!(&c[4], &(&w * &w));
    }

    #[test]
    fn sym2_determinant((af, _ag, p, kappa) in setup()) {
        let s = sym2_local(&BigInt::from(af), kappa, p);
        let det = Pow::pow(&BigInt::from(p), (3 * (kappa - 1)) as u32);
        prop_assert_eq!(s.padded()[3].clone(), -BigRational::from_integer(det));
    }

    #[test]
    fn hecke_shift_scales_variable((af, _ag, p, kappa) in setup(), shift in 0i64..12) {
        let a = BigInt::from(af);
        let base = hecke_local(&a, kappa, p, 0);
        let shifted = hecke_local(&a, kappa, p, shift);
        let scale = BigRational::from_integer(Pow::pow(&BigInt::from(p), shift as u32));
        prop_assert_eq!(shifted.poly, base.poly.scale_variable(&scale));
    }
}
