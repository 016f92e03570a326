//! q-Pochhammer symbols and basic / classical hypergeometric series.
//!
//! The basic series uses the normalization
//!
//! ```text
//! rPhis(a_1..a_r; b_1..b_s | q; z) = sum_k (a_1..a_r; q)_k / (q, b_1..b_s; q)_k
//!                                      * ((-1)^k q^{k(k-1)/2})^{1+s-r} z^k
//! ```
//!
//! which carries the sign/power factor for every `(r, s)`, including
//! `0Phi1` (exponent 2) and `1Phi1` (exponent 1).
//!
//! Exact evaluation is restricted to terminating series. Numeric evaluation
//! works with [`SignedLog`] parameters.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{from_i64, rpow, Rational, Scalar, SignedLog};

/// Length of a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u32),
    Infinite,
}

/// `(a; q)_n = prod_{k<n} (1 - a q^k)`, `1` for `n = 0`.
pub fn q_pochhammer<T: Scalar>(a: &T, q: &T, n: u32) -> T {
    let mut acc = T::one();
    let mut aq = a.clone();
    for _ in 0..n {
        acc = acc * (T::one() - aq.clone());
        aq = aq * q.clone();
    }
    acc
}

/// Exact q-Pochhammer; the infinite product has no exact value.
pub fn q_pochhammer_exact(a: &Rational, q: &Rational, order: Order) -> Result<Rational> {
    match order {
        Order::Finite(n) => Ok(q_pochhammer(a, q, n)),
        Order::Infinite => Err(Error::UnsupportedMode("(a;q)_oo has no exact rational value".into())),
    }
}

/// Finite q-Pochhammer over signed-log parameters.
pub fn q_pochhammer_log(a: SignedLog, q: SignedLog, n: u32) -> f64 {
    (0..n as i64).map(|k| a.times_pow(q, k).one_minus()).product()
}

/// Truncated infinite product with its certified error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfiniteProduct {
    pub value: f64,
    /// Bound on `|value - (a;q)_oo|`.
    pub tail_bound: f64,
    pub factors: usize,
}

/// `(a; q)_oo` for `|q| < 1`, truncated once the remaining factors are
/// certified to change the product by less than `tol` relatively.
///
/// With `s = |a| |q|^K / (1 - |q|) < 1` the omitted factors satisfy
/// `|prod_{k>=K} (1 - a q^k) - 1| <= s / (1 - s)`.
pub fn q_pochhammer_inf(a: SignedLog, q: SignedLog, tol: f64) -> Result<InfiniteProduct> {
    let qa = q.abs_value();
    if !(qa < 1.0) {
        return Err(Error::Parameter(format!("(a;q)_oo needs |q| < 1, got |q| = {qa}")));
    }
    const CAP: usize = 1_000_000;
    let denom = q.one_minus().abs().min(1.0 - qa).max(f64::MIN_POSITIVE);
    let mut value = 1.0;
    for k in 0..CAP {
        let s = a.times_pow(q, k as i64).abs_value() / denom;
        if s < 0.5 {
            let rel = s / (1.0 - s);
            if rel <= tol {
                return Ok(InfiniteProduct { value, tail_bound: value.abs() * rel, factors: k });
            }
        }
        value *= a.times_pow(q, k as i64).one_minus();
    }
    Err(Error::TruncationCap { cap: CAP })
}

/// Parameters of an `rPhis` series.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperSpec<T> {
    pub numerator: Vec<T>,
    pub denominator: Vec<T>,
    pub q: T,
    pub z: T,
}

impl<T> HyperSpec<T> {
    pub fn new(numerator: Vec<T>, denominator: Vec<T>, q: T, z: T) -> Self {
        Self { numerator, denominator, q, z }
    }

    fn sign_power_exponent(&self) -> i64 {
        1 + self.denominator.len() as i64 - self.numerator.len() as i64
    }
}

impl<T: Scalar> HyperSpec<T> {
    /// Coefficients `c_k` with `rPhis = sum_k c_k z^k`, for `k = 0..count`.
    pub fn coefficients(&self, count: usize) -> Result<Vec<T>> {
        let e = self.sign_power_exponent();
        let mut out = Vec::with_capacity(count);
        let mut c = T::one();
        for k in 0..count {
            if k > 0 {
                let j = (k - 1) as i64;
                let qj = rpow(&self.q, j);
                let mut num = T::one();
                for a in &self.numerator {
                    num = num * (T::one() - a.clone() * qj.clone());
                }
                let mut den = T::one() - self.q.clone() * qj.clone();
                for b in &self.denominator {
                    den = den * (T::one() - b.clone() * qj.clone());
                }
                if den.is_zero() {
                    if num.is_zero() || c.is_zero() {
                        c = T::zero();
                        out.push(c.clone());
                        continue;
                    }
                    return Err(Error::Parameter(format!("denominator q-Pochhammer vanishes at k = {k}")));
                }
                // ((-1)^k q^{C(k,2)})^e / ((-1)^{k-1} q^{C(k-1,2)})^e = (-q^{k-1})^e
                let step = rpow(&(-qj), e);
                c = c * num * step / den;
            }
            out.push(c.clone());
        }
        Ok(out)
    }

    /// Partial sum `sum_{k=0}^{trunc} term_k`.
    pub fn partial_sum(&self, trunc: usize) -> Result<T> {
        let cs = self.coefficients(trunc + 1)?;
        let mut acc = T::zero();
        for c in cs.iter().rev() {
            acc = acc * self.z.clone() + c.clone();
        }
        Ok(acc)
    }
}

impl HyperSpec<Rational> {
    /// Degree at which the series terminates: the least `n` such that some
    /// numerator parameter equals `q^{-n}`.
    pub fn terminating_degree(&self, search: u32) -> Option<u32> {
        let qinv = Rational::one() / self.q.clone();
        (0..=search).find(|&n| {
            let target = rpow(&qinv, n as i64);
            self.numerator.iter().any(|a| *a == target)
        })
    }
}

/// Exact evaluation of a terminating basic hypergeometric series.
///
/// Fails with [`Error::UnsupportedMode`] unless some numerator parameter is
/// `q^{-n}` with `n < trunc`.
pub fn phi_exact(spec: &HyperSpec<Rational>, trunc: usize) -> Result<Rational> {
    if spec.q.is_zero() {
        return Err(Error::Parameter("q = 0".into()));
    }
    match spec.terminating_degree(trunc as u32) {
        Some(n) if (n as usize) < trunc => spec.partial_sum(n as usize),
        _ => Err(Error::UnsupportedMode(format!(
            "exact evaluation needs a terminating series (numerator q^-n with n < {trunc})"
        ))),
    }
}

/// Numeric `rPhis` with [`SignedLog`] parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericSpec {
    pub numerator: Vec<SignedLog>,
    pub denominator: Vec<SignedLog>,
    pub q: SignedLog,
    pub z: f64,
}

/// Truncation settings for numeric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTol {
    /// Stop once two consecutive partial sums differ by less than
    /// `rel * (1 + |partial sum|)`.
    pub rel: f64,
    pub max_terms: usize,
}

impl Default for SeriesTol {
    fn default() -> Self {
        Self { rel: 1e-17, max_terms: 20_000 }
    }
}

/// Summed series with the number of terms used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
}

impl NumericSpec {
    pub fn new(numerator: Vec<SignedLog>, denominator: Vec<SignedLog>, q: SignedLog, z: f64) -> Self {
        Self { numerator, denominator, q, z }
    }

    /// Ratio `term_{k+1} / term_k`.
    fn ratio(&self, k: i64) -> Result<f64> {
        let e = 1 + self.denominator.len() as i64 - self.numerator.len() as i64;
        let num: f64 = self.numerator.iter().map(|a| a.times_pow(self.q, k).one_minus()).product();
        let den: f64 = self.q.powi(k + 1).one_minus()
            * self.denominator.iter().map(|b| b.times_pow(self.q, k).one_minus()).product::<f64>();
        if den == 0.0 {
            if num == 0.0 {
                return Ok(0.0);
            }
            return Err(Error::Parameter(format!("denominator q-Pochhammer vanishes at k = {}", k + 1)));
        }
        Ok(num / den * self.q.powi(k).neg().powi(e).value() * self.z)
    }

    /// Fixed-length partial sum `sum_{k=0}^{trunc}`, with divergence
    /// detection: terms growing for `trunc/2` consecutive steps is an error.
    pub fn partial_sum(&self, trunc: usize) -> Result<f64> {
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut growing = 0usize;
        for k in 0..trunc {
            let next = term * self.ratio(k as i64)?;
            growing = if next.abs() > term.abs() && next != 0.0 { growing + 1 } else { 0 };
            if trunc >= 4 && growing >= trunc / 2 {
                return Err(Error::Divergence(format!("terms grew for {growing} consecutive steps")));
            }
            term = next;
            sum += term;
            if term == 0.0 {
                break;
            }
        }
        check_finite(sum)
    }

    /// Sums until consecutive partial sums agree to `tol.rel`; hitting the
    /// cap is an error.
    pub fn sum(&self, tol: SeriesTol) -> Result<SeriesValue> {
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut quiet = 0;
        let mut growing = 0usize;
        for k in 0..tol.max_terms {
            let next = term * self.ratio(k as i64)?;
            if next == 0.0 {
                return Ok(SeriesValue { value: check_finite(sum)?, terms: k + 1 });
            }
            growing = if next.abs() > term.abs() { growing + 1 } else { 0 };
            if growing > 5_000 {
                return Err(Error::Divergence("terms keep growing".into()));
            }
            term = next;
            let prev = sum;
            sum += term;
            if !sum.is_finite() {
                return Err(Error::Divergence("partial sums overflowed".into()));
            }
            if (sum - prev).abs() <= tol.rel * (1.0 + sum.abs()) && growing == 0 {
                quiet += 1;
                if quiet >= 2 {
                    return Ok(SeriesValue { value: sum, terms: k + 2 });
                }
            } else {
                quiet = 0;
            }
        }
        Err(Error::TruncationCap { cap: tol.max_terms })
    }
}

fn check_finite(v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Divergence("non-finite partial sum".into()))
    }
}

/// Coefficients of `pFq(a; b; z) = sum_k prod(a)_k / prod(b)_k z^k / k!`.
pub fn classical_coefficients<T: Scalar>(p: &[T], q: &[T], count: usize) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(count);
    let mut c = T::one();
    for k in 0..count {
        if k > 0 {
            let j: T = from_i64((k - 1) as i64);
            let num = p.iter().fold(T::one(), |acc, a| acc * (a.clone() + j.clone()));
            let den = q.iter().fold(from_i64::<T>(k as i64), |acc, b| acc * (b.clone() + j.clone()));
            if den.is_zero() {
                if c.is_zero() || num.is_zero() {
                    c = T::zero();
                    out.push(c.clone());
                    continue;
                }
                return Err(Error::Parameter(format!("denominator Pochhammer vanishes at k = {k}")));
            }
            c = c * num / den;
        }
        out.push(c.clone());
    }
    Ok(out)
}

/// Numeric partial sum `sum_{k=0}^{trunc}` of `pFq`.
pub fn classical_hyp<T: Scalar>(p: &[T], q: &[T], z: &T, trunc: usize) -> Result<T> {
    let cs = classical_coefficients(p, q, trunc + 1)?;
    Ok(cs.iter().rev().fold(T::zero(), |acc, c| acc * z.clone() + c.clone()))
}

/// Exact `pFq`, only for terminating series (a nonpositive integer
/// numerator parameter `-n` with `n < trunc`).
pub fn classical_hyp_exact(p: &[Rational], q: &[Rational], z: &Rational, trunc: usize) -> Result<Rational> {
    let n = terminating_index(p).filter(|&n| n < trunc).ok_or_else(|| {
        Error::UnsupportedMode("exact pFq needs a nonpositive integer numerator parameter".into())
    })?;
    classical_hyp(p, q, z, n)
}

/// Smallest `n` such that some parameter equals `-n`.
pub fn terminating_index(p: &[Rational]) -> Option<usize> {
    p.iter()
        .filter(|a| a.is_integer() && *a <= &Rational::zero())
        .filter_map(|a| num_traits::ToPrimitive::to_usize(&(-a.to_integer())))
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&rat(5, 1), &rat(1, 2), 0), rat(1, 1));
        assert_eq!(q_pochhammer(&rat(0, 1), &rat(1, 2), 7), rat(1, 1));
        assert_eq!(q_pochhammer(&rat(2, 1), &rat(3, 1), 2), rat(5, 1));
        assert!(matches!(
            q_pochhammer_exact(&rat(1, 2), &rat(1, 2), Order::Infinite),
            Err(Error::UnsupportedMode(_))
        ));
    }

    #[test]
    fn infinite_product_euler() {
        // (q;q)_oo at q = 1/2 = 0.288788095086602421278899721929...
        let q = SignedLog::from_f64(0.5);
        let p = q_pochhammer_inf(q, q, 1e-16).unwrap();
        assert!((p.value - 0.288_788_095_086_602_4).abs() < 1e-15);
        assert!(p.tail_bound < 1e-16);
        assert!(q_pochhammer_inf(q, SignedLog::from_f64(1.0), 1e-10).is_err());
    }

    #[test]
    fn phi_z_zero_and_termination() {
        let spec = HyperSpec::new(vec![rat(8, 1)], vec![rat(1, 3)], rat(1, 2), rat(0, 1));
        assert_eq!(spec.partial_sum(10).unwrap(), rat(1, 1));
        // q^{-2} terminates: coefficients beyond k = 2 vanish exactly
        let t = HyperSpec::new(vec![rat(4, 1), rat(1, 5)], vec![rat(1, 7)], rat(1, 2), rat(1, 1));
        let cs = t.coefficients(8).unwrap();
        assert!(cs[3..].iter().all(|c| c.is_zero()));
        assert!(!cs[2].is_zero());
        assert_eq!(phi_exact(&t, 10).unwrap(), cs[0].clone() + cs[1].clone() + cs[2].clone());
        let nonterm = HyperSpec::new(vec![rat(3, 1)], vec![rat(1, 3)], rat(1, 2), rat(1, 1));
        assert!(matches!(phi_exact(&nonterm, 10), Err(Error::UnsupportedMode(_))));
    }

    #[test]
    fn little_q_jacobi_two_term_sum() {
        // 2Phi1(q^{-1}, abq^2; aq | q; qx) at q=1/2, a=1/3, b=3/4, x=1
        let (q, a, b) = (rat(1, 2), rat(1, 3), rat(3, 4));
        let spec = HyperSpec::new(
            vec![rat(2, 1), a.clone() * b.clone() * q.clone() * q.clone()],
            vec![a.clone() * q.clone()],
            q.clone(),
            q.clone(),
        );
        let one = rat(1, 1);
        let hand = one.clone()
            + (one.clone() - rat(2, 1)) * (one.clone() - a.clone() * b * q.clone() * q.clone())
                / ((one.clone() - a * q.clone()) * (one - q.clone()))
                * q;
        assert_eq!(phi_exact(&spec, 5).unwrap(), hand);
    }

    #[test]
    fn zero_denominator_is_parameter_error() {
        // b = q^{-1}: (b;q)_2 = 0
        let spec = HyperSpec::new(vec![rat(1, 3)], vec![rat(2, 1)], rat(1, 2), rat(1, 1));
        assert!(matches!(spec.coefficients(4), Err(Error::Parameter(_))));
    }

    #[test]
    fn numeric_matches_exact_terminating() {
        let spec = HyperSpec::new(vec![rat(8, 1), rat(1, 5)], vec![rat(1, 7)], rat(1, 2), rat(3, 5));
        let exact = crate::numerics::rat_to_f64(&phi_exact(&spec, 10).unwrap());
        let num = NumericSpec::new(
            vec![SignedLog::from_f64(8.0), SignedLog::from_f64(0.2)],
            vec![SignedLog::from_f64(1.0 / 7.0)],
            SignedLog::from_f64(0.5),
            0.6,
        );
        assert!((num.sum(SeriesTol::default()).unwrap().value - exact).abs() < 1e-14);
        assert!((num.partial_sum(10).unwrap() - exact).abs() < 1e-14);
    }

    #[test]
    fn divergence_detected() {
        // 2Phi0 with |z| large: ratio grows without bound
        let num = NumericSpec::new(
            vec![SignedLog::from_f64(3.0), SignedLog::from_f64(5.0)],
            vec![],
            SignedLog::from_f64(0.9),
            4.0,
        );
        assert!(matches!(num.partial_sum(40), Err(Error::Divergence(_))));
    }

    #[test]
    fn classical_examples() {
        let alpha = 0.3;
        assert_eq!(classical_hyp::<f64>(&[], &[alpha + 1.0], &0.0, 10).unwrap(), 1.0);
        let (c, d, z) = (rat(2, 3), rat(5, 7), rat(3, 11));
        let v = classical_hyp_exact(&[rat(-1, 1), c.clone()], &[d.clone()], &z, 10).unwrap();
        assert_eq!(v, rat(1, 1) - c * z.clone() / d);
        let x = std::f64::consts::FRAC_PI_2;
        let cosx = classical_hyp::<f64>(&[], &[0.5], &(-x * x / 4.0), 40).unwrap();
        assert!(cosx.abs() < 1e-14);
        assert!(classical_hyp_exact(&[rat(1, 2)], &[rat(1, 3)], &z, 10).is_err());
        assert!(matches!(
            classical_coefficients(&[rat(1, 2)], &[rat(-1, 1)], 4),
            Err(Error::Parameter(_))
        ));
    }

    proptest! {
        #[test]
        fn pochhammer_multiplicative(an in -20i64..20, ad in 1i64..9, qn in -7i64..8, qd in 8i64..13,
                                     m in 0u32..6, n in 0u32..6) {
            let a = rat(an, ad);
            let q = rat(qn, qd);
            let lhs = q_pochhammer(&a, &q, m + n);
            let rhs = q_pochhammer(&a, &q, m) * q_pochhammer(&(a.clone() * rpow(&q, m as i64)), &q, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn termination_exact(n in 0u32..6, b in 1i64..9, z in -5i64..5) {
            let q = rat(1, 3);
            let spec = HyperSpec::new(vec![rpow(&q, -(n as i64)), rat(1, 7)], vec![rat(b, 11)], q, rat(z, 2));
            let cs = spec.coefficients(n as usize + 6).unwrap();
            prop_assert!(cs[n as usize + 1..].iter().all(|c| c.is_zero()));
        }

        #[test]
        fn truncation_stability(z in -3.0f64..3.0, a in 0.05f64..0.9) {
            let spec = NumericSpec::new(vec![SignedLog::ZERO], vec![SignedLog::from_f64(a / 3.0)],
                                        SignedLog::from_f64(1.0 / 3.0), z);
            let t = spec.sum(SeriesTol { rel: 1e-15, max_terms: 500 }).unwrap();
            let doubled = spec.partial_sum(2 * t.terms).unwrap();
            prop_assert!((doubled - t.value).abs() < 1e-13);
        }
    }
}
