use num_traits::{Signed, Zero};

use super::TruncSeries;
use crate::error::{Error, Result};
use crate::numerics::{rat_to_f64, rpow, Rational, SignedLog};
use crate::opalgebra::operators;
use crate::qseries::{q_pochhammer_inf, HyperSpec, NumericSpec, SeriesTol};

fn check_q(q: SignedLog) -> Result<()> {
    if q.abs_value() < 1.0 && !q.is_zero() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("need 0 < |q| < 1, got {}", q.value())))
    }
}

/// Normalized third q-Bessel function `1Phi1(0; aq | q; qx)`.
pub fn q_bessel3_log(x: f64, a: SignedLog, q: SignedLog, tol: SeriesTol) -> Result<f64> {
    check_q(q)?;
    NumericSpec::new(vec![SignedLog::ZERO], vec![a * q], q, q.value() * x).sum(tol).map(|s| s.value)
}

pub fn q_bessel3_norm(x: f64, a: f64, q: f64) -> Result<f64> {
    q_bessel3_log(x, a.into(), q.into(), SeriesTol::default())
}

/// Normalized second q-Bessel function `0Phi1(-; qa | q; -qax)`.
pub fn q_bessel2_log(x: f64, a: SignedLog, q: SignedLog, tol: SeriesTol) -> Result<f64> {
    check_q(q)?;
    NumericSpec::new(vec![], vec![a * q], q, -(a * q).value() * x).sum(tol).map(|s| s.value)
}

pub fn q_bessel2_norm(x: f64, a: f64, q: f64) -> Result<f64> {
    q_bessel2_log(x, a.into(), q.into(), SeriesTol::default())
}

fn scaled_series(spec: HyperSpec<Rational>, step: Rational, order: usize) -> Result<TruncSeries<Rational>> {
    let cs = spec.coefficients(order + 1)?;
    Ok(TruncSeries::new(cs.into_iter().enumerate().map(|(k, c)| c * rpow(&step, k as i64)).collect()))
}

/// Exact Taylor coefficients of `x -> q_bessel3(lambda x, a; q)` to `order`.
pub fn q_bessel3_series_exact(a: &Rational, q: &Rational, lambda: &Rational, order: usize) -> Result<TruncSeries<Rational>> {
    let spec = HyperSpec::new(vec![Rational::zero()], vec![a * q], q.clone(), Rational::from_integer(1.into()));
    scaled_series(spec, q * lambda, order)
}

/// Exact Taylor coefficients of `x -> q_bessel2(lambda x; a; q)` to `order`.
pub fn q_bessel2_series_exact(a: &Rational, q: &Rational, lambda: &Rational, order: usize) -> Result<TruncSeries<Rational>> {
    let spec = HyperSpec::new(vec![], vec![a * q], q.clone(), Rational::from_integer(1.into()));
    scaled_series(spec, -(q * a * lambda), order)
}

/// Highest degree through which an exact residual series vanishes, or
/// `None` if already the constant term fails.
fn zero_through(residual: &crate::numerics::LaurentPoly<Rational>, order: usize) -> Option<usize> {
    let first_bad = (residual.min_degree().min(0)..=order as i64).find(|&d| !residual.coeff(d).is_zero());
    match first_bad {
        None => Some(order),
        Some(d) if d <= 0 => None,
        Some(d) => Some(d as usize - 1),
    }
}

/// Termwise check of `Y_{a,q} f = -lambda f`; returns the highest order
/// through which the residual series is exactly zero.
pub fn q_bessel3_eigen_exact(a: &Rational, q: &Rational, lambda: &Rational, order: usize) -> Result<Option<usize>> {
    let f = q_bessel3_series_exact(a, q, lambda, order)?.to_laurent();
    let residual = operators::q_bessel3(a, q).apply(&f) + f.scale(lambda);
    Ok(zero_through(&residual, order))
}

/// Termwise check of `Y_{a,q,2} y = -a lambda y`.
pub fn q_bessel2_eigen_exact(a: &Rational, q: &Rational, lambda: &Rational, order: usize) -> Result<Option<usize>> {
    let f = q_bessel2_series_exact(a, q, lambda, order)?.to_laurent();
    let residual = operators::q_bessel2(a, q).apply(&f) + f.scale(&(a * lambda));
    Ok(zero_through(&residual, order))
}

/// Exact partial sum of the third q-Bessel series at rational arguments with
/// a bound on the omitted terms.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedSum {
    pub value: Rational,
    pub tail_bound: f64,
}

/// `sum_{k<=order}` of `q_bessel3(x, a; q)`; the tail is bounded by
/// `|t_{K+1}|/(1 - rho)` with `rho` the (decreasing) term ratio at `K+1`.
pub fn q_bessel3_exact(x: &Rational, a: &Rational, q: &Rational, order: usize) -> Result<CertifiedSum> {
    let one = Rational::from_integer(1.into());
    if q.is_zero() || q.abs() >= one {
        return Err(Error::Parameter(format!("need 0 < |q| < 1, got {q}")));
    }
    let series = q_bessel3_series_exact(a, q, &one, order + 2)?;
    let value = series.truncate(order).eval(x);
    let next = rat_to_f64(&series.coeff(order + 1)).abs() * rat_to_f64(x).abs().powi(order as i32 + 1);
    let (qf, af, xf) = (rat_to_f64(q).abs(), rat_to_f64(a).abs(), rat_to_f64(x).abs());
    let k = (order + 1) as i32;
    let rho = qf.powi(k) * qf * xf / ((1.0 - qf.powi(k + 1)) * (1.0 - af * qf.powi(k + 1)));
    if !(rho < 1.0) || af * qf.powi(k + 1) >= 1.0 {
        return Err(Error::TruncationCap { cap: order });
    }
    Ok(CertifiedSum { value, tail_bound: next / (1.0 - rho) })
}

/// Jackson q-Bessel function of the second or third kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacksonKind {
    Second,
    Third,
}

/// `J^(2)_nu(x; q) = (q^{nu+1};q)_oo/(q;q)_oo (x/2)^nu 0Phi1(-; q^{nu+1} | q; -q^{nu+1} x^2/4)`
/// and `J^(3)_nu(x; q) = (q^{nu+1};q)_oo/(q;q)_oo (x/2)^nu 1Phi1(0; q^{nu+1} | q; q x^2/4)`
/// for `x > 0`, `0 < q < 1`.
pub fn jackson_q_bessel(kind: JacksonKind, nu: f64, x: f64, q: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("Jackson q-Bessel needs x > 0, got {x}")));
    }
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Parameter(format!("need 0 < q < 1, got {q}")));
    }
    let ql = SignedLog::from_f64(q);
    let qnu = SignedLog::exp(ql.log_abs() * (nu + 1.0));
    let prefactor = q_pochhammer_inf(qnu, ql, 1e-17)?.value / q_pochhammer_inf(ql, ql, 1e-17)?.value;
    let a = SignedLog::exp(ql.log_abs() * nu);
    let series = match kind {
        JacksonKind::Second => q_bessel2_log(x * x / 4.0, a, ql, SeriesTol::default())?,
        JacksonKind::Third => q_bessel3_log(x * x / 4.0, a, ql, SeriesTol::default())?,
    };
    Ok(prefactor * (x / 2.0).powf(nu) * series)
}
