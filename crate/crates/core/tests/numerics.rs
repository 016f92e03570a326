use proptest::prelude::*;
use qbessel::numerics::{parse_rational, rat, rational_string, solve_exact, LaurentPoly, LinearSolution, Rational, SignedLog};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |r| *r != rat(0, 1))
}

fn poly() -> impl Strategy<Value = LaurentPoly<Rational>> {
    (-4i64..=4, prop::collection::vec(small_rat(), 0..6)).prop_map(|(lo, cs)| LaurentPoly::from_coeffs(lo, cs))
}

proptest! {
    #[test]
    fn rational_string_roundtrips(r in small_rat()) {
        prop_assert_eq!(parse_rational(&rational_string(&r)).unwrap(), r);
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &LaurentPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(-&(-&p), p);
    }

    #[test]
    fn degrees_add(p in poly(), q in poly()) {
        let prod = &p * &q;
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => {
                prop_assert_eq!(prod.degree(), Some(a + b));
                prop_assert_eq!(prod.min_degree(), p.min_degree() + q.min_degree());
            }
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), x in nonzero_rat()) {
        let (px, qx) = (p.eval(&x).unwrap(), q.eval(&x).unwrap());
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), &px + &qx);
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), px * qx);
    }

    #[test]
    fn shifts_reflections_dilations(p in poly(), k in -3i64..=3, c in nonzero_rat(), x in nonzero_rat()) {
        prop_assert_eq!(p.shift(k).eval(&x).unwrap(), p.eval(&x).unwrap() * x.pow(k as i32));
        prop_assert_eq!(p.reflect().eval(&x).unwrap(), p.eval(&-x.clone()).unwrap());
        prop_assert_eq!(p.dilate(&c).eval(&x).unwrap(), p.eval(&(&c * &x)).unwrap());
        prop_assert_eq!(&p.even_part() + &p.odd_part(), p);
    }

    #[test]
    fn derivative_leibniz(p in poly(), q in poly()) {
        let lhs = (&p * &q).derivative();
        let rhs = &(&p.derivative() * &q) + &(&p * &q.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn linear_solve_recovers_solution(a in prop::collection::vec(small_rat(), 4), x in prop::collection::vec(small_rat(), 2)) {
        let rows = vec![vec![a[0].clone(), a[1].clone()], vec![a[2].clone(), a[3].clone()]];
        let rhs: Vec<Rational> = rows.iter().map(|r| &r[0] * &x[0] + &r[1] * &x[1]).collect();
        let det = &a[0] * &a[3] - &a[1] * &a[2];
        match solve_exact(&rows, &rhs, 2) {
            LinearSolution::Solved { values, free } => {
                for (r, b) in rows.iter().zip(&rhs) {
                    prop_assert_eq!(&r[0] * &values[0] + &r[1] * &values[1], b.clone());
                }
                if det != rat(0, 1) {
                    prop_assert!(free.is_empty());
                    prop_assert_eq!(values, x);
                }
            }
            LinearSolution::Inconsistent { .. } => prop_assert!(false, "consistent system reported inconsistent"),
        }
    }

    #[test]
    fn signed_log_matches_float(v in -1e6f64..1e6, n in -5i64..=5) {
        prop_assume!(v.abs() > 1e-6);
        let s = SignedLog::from_f64(v);
        prop_assert!((s.value() - v).abs() <= 1e-12 * v.abs());
        prop_assert_eq!(s.is_negative(), v < 0.0);
        let p = s.powi(n).value();
        let want = v.powi(n as i32);
        prop_assert!((p - want).abs() <= 1e-11 * want.abs(), "{} vs {}", p, want);
        prop_assert!((s.inv().value() * v - 1.0).abs() < 1e-12);
    }
}

#[test]
fn zero_polynomial_conventions() {
    let z = LaurentPoly::<Rational>::zero();
    assert!(z.is_zero());
    assert_eq!(z.degree(), None);
    assert_eq!(LaurentPoly::<Rational>::x().degree(), Some(1));
    assert_eq!(LaurentPoly::from_coeffs(-2, vec![rat(0, 1), rat(3, 1), rat(0, 1)]).min_degree(), -1);
}
