use qbessel::transforms::{forward, roundtrip_residual, TestFunction, TransformKind, TransformSpec};
use qbessel::Error;

fn gaussian(x: f64) -> f64 {
    (-x * x / 2.0).exp()
}

#[test]
fn hankel_gaussian_is_self_reciprocal() {
    let spec = TransformSpec::new(TransformKind::Hankel, 0.5);
    let lambdas: Vec<f64> = (0..=40).map(|i| i as f64 * 0.1).collect();
    let out = forward(&spec, &gaussian, &lambdas).unwrap();
    for (l, v) in lambdas.iter().zip(&out) {
        assert!((v.re - gaussian(*l)).abs() < 1e-8, "{l}: {v}");
        assert_eq!(v.im, 0.0);
    }
}

#[test]
fn hankel_gaussian_other_orders() {
    for alpha in [-0.5, 0.0, 1.3] {
        let spec = TransformSpec::new(TransformKind::Hankel, alpha);
        let out = forward(&spec, &gaussian, &[0.0, 1.0, 2.5]).unwrap();
        for (l, v) in [0.0, 1.0, 2.5].iter().zip(&out) {
            assert!((v.re - gaussian(*l)).abs() < 1e-9, "{alpha} {l}");
        }
    }
}

#[test]
fn dunkl_round_trip_odd_gaussian() {
    let spec = TransformSpec::new(TransformKind::Dunkl, 0.3);
    let f = |x: f64| TestFunction::OddGaussian.eval(x);
    let xs = [-2.0, -0.7, 0.0, 0.4, 1.5, 3.0];
    let rep = roundtrip_residual(&spec, &f, &xs).unwrap();
    assert!(rep.residual < 1e-7, "{rep:?}");
    // the same kernel both ways returns f(-x) = -f(x)
    assert!(rep.quoted_pairing_residual.unwrap() > 1.0);
}

#[test]
fn minus1_round_trip_gaussian() {
    let spec = TransformSpec::new(TransformKind::Minus1, -0.5);
    let f = |x: f64| (-x * x).exp();
    let rep = roundtrip_residual(&spec, &f, &[-1.5, -0.3, 0.0, 0.8, 2.0]).unwrap();
    assert!(rep.residual < 1e-7, "{rep:?}");
    // even input: both inverse kernels agree
    assert!(rep.quoted_pairing_residual.unwrap() < 1e-7);
}

#[test]
fn minus1_round_trip_mixed_parity() {
    let spec = TransformSpec::new(TransformKind::Minus1, 0.25);
    let f = |x: f64| TestFunction::Mixed.eval(x);
    let rep = roundtrip_residual(&spec, &f, &[-1.0, 0.5, 1.2]).unwrap();
    assert!(rep.residual < 1e-7, "{rep:?}");
    assert!(rep.quoted_pairing_residual.unwrap() > 0.1);
}

#[test]
fn hankel_round_trip_and_quoted_constant() {
    let spec = TransformSpec::new(TransformKind::Hankel, 0.7);
    let f = |x: f64| TestFunction::NarrowGaussian.eval(x);
    let rep = roundtrip_residual(&spec, &f, &[0.0, 0.5, 1.0, 2.0]).unwrap();
    assert!(rep.residual < 1e-8);
    assert!((rep.quoted_constant_residual.unwrap() - 0.5).abs() < 1e-8);
}

#[test]
fn even_functions_reduce_to_hankel() {
    let alpha = 0.4;
    let f = |x: f64| (-x * x).exp() * (1.0 + x * x);
    let lambdas = [0.0, 0.3, 1.1, 2.7, 4.0];
    let h = forward(&TransformSpec::new(TransformKind::Hankel, alpha), &f, &lambdas).unwrap();
    for kind in [TransformKind::Minus1, TransformKind::Dunkl] {
        let m = forward(&TransformSpec::new(kind, alpha), &f, &lambdas).unwrap();
        for (a, b) in h.iter().zip(&m) {
            assert!((a - b).norm() < 1e-8, "{kind:?}");
        }
    }
}

#[test]
fn forward_is_linear_and_zero_maps_to_zero() {
    let spec = TransformSpec::new(TransformKind::Dunkl, 0.1);
    let lambdas = [-1.0, 0.5, 2.0];
    let f = |x: f64| TestFunction::Mixed.eval(x);
    let g = |x: f64| TestFunction::OddGaussian.eval(x);
    let sum = |x: f64| 2.0 * f(x) - 3.0 * g(x);
    let (a, b, c) = (
        forward(&spec, &f, &lambdas).unwrap(),
        forward(&spec, &g, &lambdas).unwrap(),
        forward(&spec, &sum, &lambdas).unwrap(),
    );
    for i in 0..3 {
        assert!((a[i] * 2.0 - b[i] * 3.0 - c[i]).norm() < 1e-12);
    }
    let zero = forward(&spec, &|_| 0.0, &lambdas).unwrap();
    assert!(zero.iter().all(|v| v.norm() == 0.0));
}

#[test]
fn coarse_grid_reports_accuracy_error() {
    let mut spec = TransformSpec::new(TransformKind::Hankel, 0.0);
    spec.panels = 2;
    spec.order = 4;
    let slow = |x: f64| 1.0 / (1.0 + x * x);
    assert!(matches!(forward(&spec, &slow, &[8.0]), Err(Error::Accuracy { .. })));
}

#[test]
fn invalid_alpha_rejected() {
    let spec = TransformSpec::new(TransformKind::Hankel, -1.5);
    assert!(matches!(forward(&spec, &gaussian, &[1.0]), Err(Error::Parameter(_))));
}
