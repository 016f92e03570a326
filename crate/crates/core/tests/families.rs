use proptest::prelude::*;
use qbessel::families::*;
use qbessel::numerics::{rat, rpow, LaurentPoly, Rational};
use qbessel::opalgebra::operators;

fn lqj_tuples() -> Vec<(Rational, Rational, Rational)> {
    vec![
        (rat(1, 2), rat(1, 3), rat(3, 4)),
        (rat(1, 3), rat(2, 5), rat(5, 2)),
        (rat(-2, 7), rat(1, 2), rat(9, 8)),
    ]
}

#[test]
fn little_q_jacobi_eigen() {
    for (q, a, b) in lqj_tuples() {
        for n in 0..=12 {
            let p = little_q_jacobi(n, &q, &a, &b).unwrap();
            assert_eq!(p.coeffs.degree(), Some(n as i64));
            assert_eq!(p.coeffs.coeff(0), rat(1, 1));
            assert!(eigen_check(&p).unwrap().exact, "n={n}");
        }
    }
    let (q, a, b) = (rat(1, 2), rat(1, 3), rat(3, 4));
    let p2 = little_q_jacobi(2, &q, &a, &b).unwrap();
    let lambda2 = rpow(&q, -2) * (rat(1, 1) - &q * &q) * (rat(1, 1) - &a * &b * rpow(&q, 3));
    assert_eq!(operators::little_q_jacobi(&a, &b, &q).apply(&p2.coeffs), p2.coeffs.scale(&lambda2));
}

#[test]
fn little_q_jacobi_matches_series_at_one() {
    let (q, a, b) = (rat(1, 2), rat(1, 3), rat(3, 4));
    let p2 = little_q_jacobi(2, &q, &a, &b).unwrap();
    let one = rat(1, 1);
    // three-term 2Phi1 sum at x = 1
    let (n1, n2, d) = (rpow(&q, -2), &a * &b * rpow(&q, 3), &a * &q);
    let t1 = (&one - &n1) * (&one - &n2) / ((&one - &q) * (&one - &d)) * &q;
    let t2 = &t1 * (&one - &n1 * &q) * (&one - &n2 * &q) / ((&one - &q * &q) * (&one - &d * &q)) * &q;
    assert_eq!(p2.eval(&one), &one + t1 + t2);
}

#[test]
fn q_laguerre_eigen_and_recurrence() {
    for (q, a, _) in lqj_tuples() {
        for n in 0..=12 {
            assert!(eigen_check(&q_laguerre(n, &q, &a).unwrap()).unwrap().exact, "n={n}");
        }
        for n in 1..=10 {
            assert!(q_laguerre_recurrence_holds(n, &q, &a).unwrap(), "n={n}");
        }
    }
}

#[test]
fn minus1_jacobi_eigen_and_parity() {
    for (alpha, beta) in [(rat(1, 2), rat(3, 2)), (rat(-1, 3), rat(2, 5)), (rat(2, 1), rat(0, 1))] {
        for n in 0..=12 {
            let p = minus1_jacobi(n, &alpha, &beta).unwrap();
            assert_eq!(p.coeffs.degree(), Some(n as i64));
            assert_eq!(p.coeffs.coeff(0), rat(1, 1));
            assert!(eigen_check(&p).unwrap().exact, "n={n}");
            let even = p.coeffs.even_part();
            let odd = p.coeffs.odd_part();
            assert!(even.terms().all(|(d, _)| d % 2 == 0));
            assert!(odd.terms().all(|(d, _)| d % 2 == 1));
        }
    }
    let (alpha, beta) = (rat(1, 2), rat(3, 2));
    let op = operators::minus1_jacobi(&alpha, &beta);
    let p2 = minus1_jacobi(2, &alpha, &beta).unwrap().coeffs;
    assert_eq!(op.apply(&p2), p2.scale(&rat(-2, 1)));
    let p3 = minus1_jacobi(3, &alpha, &beta).unwrap().coeffs;
    assert_eq!(op.apply(&p3), p3.scale(&(alpha.clone() + beta.clone() + rat(4, 1))));
    // the alpha + beta variant misses both
    let shifted = operators::minus1_jacobi_shifted(&alpha, &beta);
    assert_ne!(shifted.apply(&p3), p3.scale(&(alpha + beta + rat(4, 1))));
}

#[test]
fn orthogonality() {
    let (q, a, b) = (rat(1, 2), rat(1, 3), rat(3, 4));
    let s01 = orthogonality_sum(0, 1, &q, &a, &b, 200).unwrap();
    assert!(s01.value.abs() < 1e-12 + s01.tail_bound);
    let s00 = orthogonality_sum(0, 0, &q, &a, &b, 200).unwrap();
    assert_eq!(s00.expected, 1.0);
    assert!(s00.passes(1e-12));
    for m in 0..=6 {
        for n in 0..=6 {
            let s = orthogonality_sum(m, n, &q, &a, &b, 200).unwrap();
            assert!(s.passes(1e-10), "{m} {n} {s:?}");
        }
    }
    assert!(orthogonality_sum(0, 1, &q, &rat(3, 1), &b, 200).is_err());
}

#[test]
fn q_laguerre_tends_to_laguerre() {
    // argument scaled by (1 - q)
    let alpha = 0.5;
    let target = laguerre_classical(3, &rat(1, 2)).unwrap();
    let mut last = f64::INFINITY;
    for eps in [0.1, 0.01, 0.001] {
        let q: f64 = (-eps as f64).exp();
        let qr = Rational::from_float(q).unwrap();
        let ar = Rational::from_float(q.powf(alpha)).unwrap();
        let p = q_laguerre(3, &qr, &ar).unwrap();
        let err = (0..=3)
            .map(|d| (qbessel::numerics::rat_to_f64(&p.coeffs.coeff(d)) * (1.0 - q).powi(d as i32) - qbessel::numerics::rat_to_f64(&target.coeffs.coeff(d))).abs())
            .fold(0.0, f64::max);
        assert!(err < last);
        last = err;
    }
    assert!(last < 2e-2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn eigen_identities_random_params(qn in 1i64..9, an in 1i64..9, bn in -6i64..9, n in 0u32..9) {
        let q = rat(qn, 10);
        let a = rat(an, 7);
        let b = rat(bn, 5);
        prop_assert!(eigen_check(&little_q_jacobi(n, &q, &a, &b).unwrap()).unwrap().exact);
        prop_assert!(eigen_check(&q_laguerre(n, &q, &a).unwrap()).unwrap().exact);
        prop_assert!(eigen_check(&minus1_jacobi(n, &a, &b).unwrap()).unwrap().exact);
    }
}

#[test]
fn laurent_is_proper_after_build() {
    let p = jacobi_classical(5, &rat(1, 2), &rat(3, 2)).unwrap();
    assert!(p.coeffs.is_proper());
    assert_eq!(p.coeffs.degree(), Some(5));
    let _ = LaurentPoly::<Rational>::zero();
}
