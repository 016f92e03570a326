use num_complex::Complex;
use num_traits::{One, Zero};
use serde::Serialize;
use statrs::function::gamma::gamma;

use super::TruncSeries;
use crate::error::{Error, Result};
use crate::numerics::{rat, Complex64, ComplexExact, Rational};
use crate::opalgebra::operators;

/// Default series order for the numeric residual checks.
pub const SERIES_ORDER: usize = 64;

/// Above this argument the normalized Bessel function switches from the
/// power series to Miller's backward recurrence.
const SERIES_LIMIT: f64 = 10.0;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > -1.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("order must exceed -1, got {alpha}")))
    }
}

/// Normalized Bessel function `Gamma(a+1) (2/t)^a J_a(t) = 0F1(; a+1; -t^2/4)`.
pub fn bessel_norm(alpha: f64, t: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let t = t.abs();
    if t <= SERIES_LIMIT {
        Ok(bessel_norm_power_series(alpha, t))
    } else {
        Ok(bessel_norm_miller(alpha, t))
    }
}

fn bessel_norm_power_series(alpha: f64, t: f64) -> f64 {
    let z = -t * t / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..400 {
        let k = k as f64;
        term *= z / ((alpha + k) * k);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Backward recurrence `J_{v-1} = (2v/t) J_v - J_{v+1}` from a large start
/// index, normalized with the Neumann sum
/// `(t/2)^a = sum_k (a + 2k) Gamma(a + k)/k! J_{a+2k}(t)`.
fn bessel_norm_miller(alpha: f64, t: f64) -> f64 {
    let mut start = (t + 25.0 + 12.0 * t.sqrt()) as usize;
    start += start % 2;
    // c_k = (a + 2k) (a+1)_{k-1}/k! for k >= 1, c_0 = 1
    let mut weights = vec![0.0; start / 2 + 1];
    weights[0] = 1.0;
    let mut r = 1.0;
    for k in 1..weights.len() {
        if k > 1 {
            r *= (alpha + (k - 1) as f64) / k as f64;
        }
        weights[k] = (alpha + 2.0 * k as f64) * r;
    }
    let mut above = 0.0;
    let mut cur = 1e-300;
    let mut sum = if start % 2 == 0 { weights[start / 2] * cur } else { 0.0 };
    for m in (1..=start).rev() {
        let below = 2.0 * (alpha + m as f64) / t * cur - above;
        above = cur;
        cur = below;
        let idx = m - 1;
        if idx % 2 == 0 {
            sum += weights[idx / 2] * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            above *= 1e-250;
            sum *= 1e-250;
        }
    }
    cur / sum
}

/// `J_nu(x) = (x/2)^nu / Gamma(nu+1) * bessel_norm(nu, x)` for `x > 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("J_nu needs x > 0, got {x}")));
    }
    Ok((x / 2.0).powf(nu) / gamma(nu + 1.0) * bessel_norm(nu, x)?)
}

/// `(J_nu(x), J_nu'(x))` by termwise summation of the power series.
pub fn bessel_j_with_derivative(nu: f64, x: f64) -> Result<(f64, f64)> {
    check_alpha(nu)?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("J_nu needs x > 0, got {x}")));
    }
    let h = x / 2.0;
    let mut term = h.powf(nu) / gamma(nu + 1.0);
    let (mut value, mut deriv) = (0.0, 0.0);
    for k in 0..200 {
        let kf = k as f64;
        value += term;
        deriv += term * (2.0 * kf + nu) / x;
        term *= -h * h / ((kf + 1.0) * (kf + 1.0 + nu));
        if term.abs() < 1e-18 * value.abs().max(1e-300) && k > 4 {
            break;
        }
    }
    Ok((value, deriv))
}

/// Taylor series of `x -> bessel_norm(alpha, lambda x)`.
pub fn bessel_norm_series(alpha: f64, lambda: f64, order: usize) -> TruncSeries<f64> {
    let mut c = 1.0;
    let mut out = vec![0.0; order + 1];
    for k in 0..=order / 2 {
        out[2 * k] = c;
        let kf = k as f64 + 1.0;
        c *= -lambda * lambda / 4.0 / ((alpha + kf) * kf);
    }
    TruncSeries::new(out)
}

/// `(lambda x / (2(alpha+1))) bessel_norm(alpha+1, lambda x)` as a series.
fn odd_companion_series(alpha: f64, lambda: f64, order: usize) -> TruncSeries<f64> {
    let inner = bessel_norm_series(alpha + 1.0, lambda, order);
    let scale = lambda / (2.0 * (alpha + 1.0));
    TruncSeries::from_fn(order, |k| if k == 0 { 0.0 } else { inner.coeff(k - 1) * scale })
}

/// Nonsymmetric (Dunkl) kernel
/// `E_a(t) = J_a(t) + i t/(2(a+1)) J_{a+1}(t)` in normalized form.
pub fn dunkl_kernel(alpha: f64, t: f64) -> Result<Complex64> {
    let even = bessel_norm(alpha, t)?;
    let odd = t / (2.0 * (alpha + 1.0)) * bessel_norm(alpha + 1.0, t)?;
    Ok(Complex64::new(even, odd))
}

pub fn dunkl_kernel_series(alpha: f64, lambda: f64, order: usize) -> TruncSeries<Complex64> {
    let even = bessel_norm_series(alpha, lambda, order);
    let odd = odd_companion_series(alpha, lambda, order);
    TruncSeries::from_fn(order, |k| Complex64::new(even.coeff(k), odd.coeff(k)))
}

/// (-1)-Bessel function `J_a(t) + t/(2(a+1)) J_{a+1}(t)` in normalized form.
pub fn minus1_bessel(alpha: f64, t: f64) -> Result<f64> {
    let k = dunkl_kernel(alpha, t)?;
    Ok(k.re + k.im)
}

pub fn minus1_bessel_series(alpha: f64, lambda: f64, order: usize) -> TruncSeries<f64> {
    &bessel_norm_series(alpha, lambda, order) + &odd_companion_series(alpha, lambda, order)
}

/// Hartley kernel `cos x + sin x`.
pub fn cas(x: f64) -> f64 {
    x.cos() + x.sin()
}

/// `|f'' + (2a+1)/x f' + lambda^2 f|` at `x` for `f(x) = bessel_norm(a, lambda x)`,
/// by series differentiation.
pub fn ode_residual(alpha: f64, lambda: f64, x: f64) -> f64 {
    let f = bessel_norm_series(alpha, lambda, SERIES_ORDER);
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let lhs = &d2 + &d1.div_x().scale(&(2.0 * alpha + 1.0));
    (lhs.eval(&x) + lambda * lambda * f.eval(&x)).abs()
}

/// `|T_a E_a(lambda .)(x) - i lambda E_a(lambda x)|` with the Dunkl operator
/// `T_a f = f' + (a + 1/2)(f(x) - f(-x))/x`.
pub fn dunkl_eigen_residual(alpha: f64, lambda: f64, x: f64) -> f64 {
    let f = dunkl_kernel_series(alpha, lambda, SERIES_ORDER);
    let diff = f.odd_part().div_x().scale(&Complex64::new(2.0 * alpha + 1.0, 0.0));
    let tf = &f.derivative() + &diff;
    let x = Complex64::new(x, 0.0);
    (tf.eval(&x) - Complex64::new(0.0, lambda) * f.eval(&x)).norm()
}

/// `|Y_a f(x) - lambda f(x)|` for `f(x) = minus1_bessel(a, lambda x)`, with
/// `Y_a f = f'(-x) + (a + 1/2)(f(x) - f(-x))/x`.
pub fn minus1_eigen_residual(alpha: f64, lambda: f64, x: f64) -> f64 {
    let f = minus1_bessel_series(alpha, lambda, SERIES_ORDER);
    let yf = &f.derivative().reflect() + &f.odd_part().div_x().scale(&(2.0 * alpha + 1.0));
    (yf.eval(&x) - lambda * f.eval(&x)).abs()
}

/// Maximum residual of the lowering and raising formulas
/// `J_a' - (a/x) J_a + J_{a+1} = 0` and `J_{a+1}' + ((a+1)/x) J_{a+1} - J_a = 0`.
pub fn raising_lowering_check(alpha: f64, xs: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &x in xs {
        let (j0, d0) = bessel_j_with_derivative(alpha, x)?;
        let (j1, d1) = bessel_j_with_derivative(alpha + 1.0, x)?;
        worst = worst.max((d0 - alpha / x * j0 + j1).abs());
        worst = worst.max((d1 + (alpha + 1.0) / x * j1 - j0).abs());
    }
    Ok(worst)
}

/// Residuals of the even/odd decomposition of `g(x) = minus1_bessel(a, lambda x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DecompositionReport {
    /// `max |even(g) - bessel_norm(a, lambda x)|`.
    pub even: f64,
    /// `max |odd(g) + (1/lambda) d/dx bessel_norm(a, lambda x)|`.
    pub odd: f64,
    /// `max |-(1/lambda) d/dx bessel_norm(a, lambda x) - lambda x/(2(a+1)) bessel_norm(a+1, lambda x)|`.
    pub companion: f64,
}

impl DecompositionReport {
    pub fn max(&self) -> f64 {
        self.even.max(self.odd).max(self.companion)
    }
}

pub fn theorem_decomposition_check(alpha: f64, lambda: f64, xs: &[f64]) -> Result<DecompositionReport> {
    check_alpha(alpha)?;
    let d = bessel_norm_series(alpha, lambda, SERIES_ORDER).derivative();
    let mut rep = DecompositionReport { even: 0.0, odd: 0.0, companion: 0.0 };
    for &x in xs {
        let (gp, gm) = (minus1_bessel(alpha, lambda * x)?, minus1_bessel(alpha, -lambda * x)?);
        let lowered = -d.eval(&x) / lambda;
        let t = lambda * x;
        rep.even = rep.even.max(((gp + gm) / 2.0 - bessel_norm(alpha, t)?).abs());
        rep.odd = rep.odd.max(((gp - gm) / 2.0 - lowered).abs());
        rep.companion = rep.companion.max((lowered - t / (2.0 * (alpha + 1.0)) * bessel_norm(alpha + 1.0, t)?).abs());
    }
    Ok(rep)
}

/// Least-squares fit of `minus1_bessel(a, lambda x) ~ c1 E_a(lambda x) + c2 E_a(-lambda x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DunklRelationReport {
    pub c1: [f64; 2],
    pub c2: [f64; 2],
    pub fit_residual: f64,
    /// Residual with `c1 = (1+i)/2`, `c2 = (1-i)/2`.
    pub quoted_residual: f64,
    /// Residual with `c1 = (1-i)/2`, `c2 = (1+i)/2`.
    pub swapped_residual: f64,
}

pub fn minus1_dunkl_relation_check(alpha: f64, lambda: f64, xs: &[f64]) -> Result<DunklRelationReport> {
    let mut rows = Vec::with_capacity(xs.len());
    for &x in xs {
        let t = lambda * x;
        rows.push((Complex64::new(minus1_bessel(alpha, t)?, 0.0), dunkl_kernel(alpha, t)?, dunkl_kernel(alpha, -t)?));
    }
    // normal equations for the two complex unknowns
    let (mut a11, mut a12, mut a22) = (Complex64::zero(), Complex64::zero(), Complex64::zero());
    let (mut b1, mut b2) = (Complex64::zero(), Complex64::zero());
    for (g, e1, e2) in &rows {
        a11 += e1.conj() * e1;
        a12 += e1.conj() * e2;
        a22 += e2.conj() * e2;
        b1 += e1.conj() * g;
        b2 += e2.conj() * g;
    }
    let a21 = a12.conj();
    let det = a11 * a22 - a12 * a21;
    let c1 = (b1 * a22 - a12 * b2) / det;
    let c2 = (a11 * b2 - a21 * b1) / det;
    let residual = |c1: Complex64, c2: Complex64| {
        rows.iter().map(|(g, e1, e2)| (g - c1 * e1 - c2 * e2).norm()).fold(0.0, f64::max)
    };
    let (p, m) = (Complex64::new(0.5, 0.5), Complex64::new(0.5, -0.5));
    Ok(DunklRelationReport {
        c1: [c1.re, c1.im],
        c2: [c2.re, c2.im],
        fit_residual: residual(c1, c2),
        quoted_residual: residual(p, m),
        swapped_residual: residual(m, p),
    })
}

/// Exact series of `E_a(lambda x)` over complex rationals.
pub fn dunkl_kernel_series_exact(alpha: &Rational, lambda: &Rational, order: usize) -> TruncSeries<ComplexExact> {
    let quarter = -(lambda * lambda) / rat(4, 1);
    let mut even = Rational::one();
    let mut odd = lambda / (rat(2, 1) * (alpha + rat(1, 1)));
    let mut out = vec![ComplexExact::zero(); order + 1];
    for k in 0..=order / 2 {
        out[2 * k] = Complex::new(even.clone(), Rational::zero());
        if 2 * k + 1 <= order {
            out[2 * k + 1] = Complex::new(Rational::zero(), odd.clone());
        }
        let kk = rat(k as i64 + 1, 1);
        even = even * &quarter / ((alpha + &kk) * &kk);
        odd = odd * &quarter / ((alpha + rat(1, 1) + &kk) * &kk);
    }
    TruncSeries::new(out)
}

/// `T_a E_a(lambda .) = i lambda E_a(lambda .)` on the exact series through
/// order `order - 2`.
pub fn dunkl_eigen_exact(alpha: &Rational, lambda: &Rational, order: usize) -> bool {
    let f = dunkl_kernel_series_exact(alpha, lambda, order).to_laurent();
    let a = Complex::new(alpha.clone(), Rational::zero());
    let image = operators::dunkl(&a).apply(&f);
    let il = Complex::new(Rational::zero(), lambda.clone());
    let residual = image - f.scale(&il);
    (0..=order as i64 - 2).all(|d| residual.coeff(d).is_zero())
}
