use qbessel::besselfam::*;
use qbessel::numerics::{rat, rat_to_f64, Complex64, SignedLog};
use qbessel::qseries::{phi_exact, HyperSpec, NumericSpec};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn normalized_bessel_values() {
    assert_eq!(bessel_norm(0.3, 0.0).unwrap(), 1.0);
    assert!(close(bessel_norm(-0.5, 1.0).unwrap(), 1f64.cos(), 1e-15));
    assert!(close(bessel_norm(0.5, 1.0).unwrap(), 1f64.sin(), 1e-15));
    assert!(matches!(bessel_norm(-1.0, 1.0), Err(qbessel::Error::Parameter(_))));
    // mpmath oracle, 40 digits
    let oracle = [
        (0.3, 0.7, 0.908_247_806_515_800_9),
        (0.3, 12.5, 0.027_935_640_101_232_2),
        (-0.75, 30.0, 2.113_818_471_878_177_4),
        (2.0, 144.0, -7.216_480_425_281_899e-6),
        (0.5, 97.3, 0.000_917_300_446_456_970_7),
        (-0.5, 60.0, -0.952_412_980_415_156_3),
        (1.7, 11.0, 0.003_890_435_383_764_726),
    ];
    for (a, t, v) in oracle {
        let got = bessel_norm(a, t).unwrap();
        assert!((got - v).abs() < 1e-13, "{a} {t}: {got} vs {v}");
    }
}

#[test]
fn series_and_recurrence_agree_across_switch() {
    for a in [-0.9, -0.25, 0.0, 0.5, 3.0] {
        for t in [9.0, 10.0, 10.5, 11.5] {
            let s = bessel_norm_series(a, 1.0, 160).eval(&t);
            assert!((bessel_norm(a, t).unwrap() - s).abs() < 1e-11, "{a} {t}");
        }
    }
}

#[test]
fn parity_and_trig_special_cases() {
    for i in 0..20 {
        let x = -3.0 + 6.0 * i as f64 / 19.0;
        assert_eq!(bessel_norm(0.7, x).unwrap(), bessel_norm(0.7, -x).unwrap());
        assert!((bessel_norm(-0.5, x).unwrap() - x.cos()).abs() < 1e-12);
        let sinc = if x == 0.0 { 1.0 } else { x.sin() / x };
        assert!((bessel_norm(0.5, x).unwrap() - sinc).abs() < 1e-12);
        assert!((dunkl_kernel(-0.5, x).unwrap() - Complex64::new(0.0, x).exp()).norm() < 1e-12);
        assert!((minus1_bessel(-0.5, x).unwrap() - cas(x)).abs() < 1e-12);
    }
}

#[test]
fn kernels_at_zero_and_cas() {
    assert_eq!(dunkl_kernel(0.4, 0.0).unwrap(), Complex64::new(1.0, 0.0));
    assert_eq!(minus1_bessel(0.4, 0.0).unwrap(), 1.0);
    assert_eq!(cas(0.0), 1.0);
    assert!((cas(std::f64::consts::FRAC_PI_4) - 2f64.sqrt()).abs() < 1e-15);
    // Lambda = s d/dx applied to cas(lambda x)
    let lambda: f64 = 1.7;
    for x in [-1.2f64, 0.3, 2.0] {
        let d = lambda * (-(lambda * -x).sin() + (lambda * -x).cos());
        assert!((d - lambda * cas(lambda * x)).abs() < 1e-14);
    }
}

#[test]
fn eigen_residuals() {
    assert!(dunkl_eigen_residual(0.3, 0.7, 0.9) < 1e-10);
    assert!(minus1_eigen_residual(0.25, 1.3, 0.8) < 1e-10);
    for a in [-0.4, 0.5, 2.0] {
        for x in [0.2, 1.0, 2.5] {
            assert!(ode_residual(a, 1.3, x) < 1e-9);
        }
    }
    assert!(dunkl_eigen_exact(&rat(3, 10), &rat(7, 10), 30));
    assert!(dunkl_eigen_exact(&rat(-1, 2), &rat(2, 1), 24));
}

#[test]
fn raising_lowering() {
    assert!(raising_lowering_check(0.5, &[0.5, 1.0, 2.0]).unwrap() < 1e-10);
    assert!(raising_lowering_check(-0.5, &[0.5, 1.0, 2.0]).unwrap() < 1e-12);
    for a in [-0.25, 0.5, 2.0] {
        for l in [0.5, 1.3] {
            let rep = theorem_decomposition_check(a, l, &[-2.0, -0.7, 0.4, 1.1, 2.9]).unwrap();
            assert!(rep.max() < 1e-10, "{a} {l} {rep:?}");
        }
    }
}

#[test]
fn dunkl_relation_constants() {
    let xs: Vec<f64> = (1..=12).map(|i| -3.0 + 0.5 * i as f64).collect();
    for a in [-0.5, 0.3] {
        let rep = minus1_dunkl_relation_check(a, 1.1, &xs).unwrap();
        assert!((rep.c1[0] - 0.5).abs() < 1e-10 && (rep.c1[1] + 0.5).abs() < 1e-10, "{rep:?}");
        assert!((rep.c2[0] - 0.5).abs() < 1e-10 && (rep.c2[1] - 0.5).abs() < 1e-10);
        assert!(rep.fit_residual < 1e-12);
        assert!(rep.swapped_residual < 1e-12);
        assert!(rep.quoted_residual > 0.1);
    }
}

#[test]
fn q_bessel_values() {
    assert_eq!(q_bessel3_norm(0.0, 0.3, 0.5).unwrap(), 1.0);
    assert_eq!(q_bessel2_norm(0.0, 0.3, 0.5).unwrap(), 1.0);
    // mpmath oracle
    assert!((q_bessel3_norm(0.5, 0.25, 0.25).unwrap() - 0.828_194_339_511_532_6).abs() < 1e-15);
    assert!((q_bessel3_norm(2.5, 0.6, -0.7).unwrap() + 0.610_818_698_230_183_6).abs() < 1e-14);
    assert!((q_bessel2_norm(0.3, 0.25, 1.0 / 3.0).unwrap() - 0.959_222_360_059_647_8).abs() < 1e-15);
    assert!((q_bessel2_norm(4.0, 0.5, 0.8).unwrap() + 0.364_505_867_870_083_6).abs() < 1e-13);
    assert!(q_bessel3_norm(1.0, 0.3, 1.0).is_err());
}

#[test]
fn phi11_matches_q_bessel3() {
    let spec = NumericSpec::new(
        vec![SignedLog::ZERO],
        vec![SignedLog::from_f64(1.0 / 16.0)],
        SignedLog::from_f64(0.25),
        0.125,
    );
    let direct = spec.partial_sum(40).unwrap();
    assert!((direct - q_bessel3_norm(0.5, 0.25, 0.25).unwrap()).abs() < 1e-16);
}

#[test]
fn exact_termwise_eigenchecks() {
    let (q, a, l) = (rat(1, 3), rat(1, 4), rat(1, 1));
    assert!(q_bessel3_eigen_exact(&a, &q, &l, 30).unwrap().unwrap() >= 28);
    assert!(q_bessel2_eigen_exact(&a, &q, &l, 30).unwrap().unwrap() >= 28);
    for (q, a, l) in [(rat(2, 5), rat(3, 7), rat(5, 2)), (rat(-1, 2), rat(2, 1), rat(-1, 3))] {
        assert!(q_bessel3_eigen_exact(&a, &q, &l, 30).unwrap().unwrap() >= 28);
        assert!(q_bessel2_eigen_exact(&a, &q, &l, 30).unwrap().unwrap() >= 28);
    }
}

#[test]
fn certified_exact_sum() {
    let s = q_bessel3_exact(&rat(1, 2), &rat(1, 4), &rat(1, 4), 12).unwrap();
    assert!((rat_to_f64(&s.value) - 0.828_194_339_511_532_6).abs() <= s.tail_bound + 3e-16);
    assert!(s.tail_bound < 1e-20);
    // terminating check of the series helper on a polynomial case
    let spec = HyperSpec::new(vec![rat(4, 1)], vec![rat(1, 3)], rat(1, 2), rat(1, 1));
    assert!(phi_exact(&spec, 5).is_ok());
}

#[test]
fn jackson_functions() {
    let j2 = jackson_q_bessel(JacksonKind::Second, 1.5, 2.2, 0.6).unwrap();
    let j3 = jackson_q_bessel(JacksonKind::Third, 1.5, 2.2, 0.6).unwrap();
    assert!((j2 - 0.301_343_608_013_320_9).abs() < 1e-14);
    assert!((j3 + 0.337_510_863_225_836).abs() < 1e-14);
    // J3 = prefactor (x/2)^nu q_bessel3(x^2/4, q^nu; q)
    let (nu, x, q) = (0.8, 1.3, 0.45);
    let direct = jackson_q_bessel(JacksonKind::Third, nu, x, q).unwrap();
    let ratio = direct / ((x / 2.0f64).powf(nu) * q_bessel3_norm(x * x / 4.0, q.powf(nu), q).unwrap());
    let small = jackson_q_bessel(JacksonKind::Third, nu, 1e-6, q).unwrap() / 5e-7f64.powf(nu);
    assert!((ratio - small).abs() < 1e-10);
    // classical limit with argument scaled by (1 - q)
    let target = bessel_j(1.5, 2.2).unwrap();
    let e1 = (jackson_q_bessel(JacksonKind::Second, 1.5, 2.2 * 0.1, 0.9).unwrap() - target).abs();
    let e2 = (jackson_q_bessel(JacksonKind::Second, 1.5, 2.2 * 0.01, 0.99).unwrap() - target).abs();
    assert!(e2 < e1 && e2 < 1e-2, "{e1} {e2}");
    assert!(jackson_q_bessel(JacksonKind::Second, 1.0, -1.0, 0.5).is_err());
}

#[test]
fn q_bessel3_classical_limit() {
    let (alpha, x) = (0.5, 0.8);
    let target = bessel_norm(alpha, 2.0 * f64::sqrt(x)).unwrap();
    let mut last = f64::INFINITY;
    for q in [0.9, 0.99, 0.999] {
        let v = q_bessel3_norm((1.0f64 - q).powi(2) * x, q.powf(alpha), q).unwrap();
        let err = (v - target).abs();
        assert!(err < last);
        last = err;
    }
    assert!(last < 1e-3);
}

#[test]
fn series_helpers() {
    let s = TruncSeries::new(vec![1.0, 2.0, 3.0, 4.0]);
    assert_eq!(s.derivative().coeffs(), &[2.0, 6.0, 12.0]);
    assert_eq!(s.reflect().eval(&1.0), 1.0 - 2.0 + 3.0 - 4.0);
    assert_eq!((&s.even_part() + &s.odd_part()), s);
    assert_eq!(s.odd_part().div_x().coeffs(), &[2.0, 0.0, 4.0]);
    assert_eq!((&s * &TruncSeries::new(vec![1.0, 1.0])).coeffs(), &[1.0, 3.0]);
}
