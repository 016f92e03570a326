use std::ops::{Add, Mul, Sub};

use crate::numerics::{from_i64, LaurentPoly, Scalar};

/// Truncated power series `sum_{k<=K} c_k x^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        Self { coeffs }
    }

    /// Coefficients `gen(0) ..= gen(order)`.
    pub fn from_fn(order: usize, gen: impl FnMut(usize) -> T) -> Self {
        Self { coeffs: (0..=order).map(gen).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * from_i64(k as i64)).collect(),
        }
    }

    /// `f(-x)`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    pub fn even_part(&self) -> Self {
        self.keep(|k| k % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.keep(|k| k % 2 == 1)
    }

    fn keep(&self, pred: impl Fn(usize) -> bool) -> Self {
        Self {
            coeffs: self.coeffs.iter().enumerate().map(|(k, c)| if pred(k) { c.clone() } else { T::zero() }).collect(),
        }
    }

    /// `f(x)/x`, dropping the constant term.
    pub fn div_x(&self) -> Self {
        Self { coeffs: self.coeffs.iter().skip(1).cloned().collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect() }
    }

    /// Truncates to order `k`.
    pub fn truncate(&self, k: usize) -> Self {
        Self { coeffs: self.coeffs.iter().take(k + 1).cloned().collect() }
    }

    pub fn to_laurent(&self) -> LaurentPoly<T> {
        LaurentPoly::from_coeffs(0, self.coeffs.clone())
    }

    pub fn from_laurent(p: &LaurentPoly<T>) -> Self {
        let top = p.degree().unwrap_or(0).max(0) as usize;
        Self::from_fn(top, |k| p.coeff(k as i64))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> TruncSeries<U> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

fn zip_with<T: Scalar>(a: &TruncSeries<T>, b: &TruncSeries<T>, f: impl Fn(T, T) -> T) -> TruncSeries<T> {
    let n = a.coeffs.len().max(b.coeffs.len());
    TruncSeries { coeffs: (0..n).map(|k| f(a.coeff(k), b.coeff(k))).collect() }
}

impl<T: Scalar> Add for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: Self) -> TruncSeries<T> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<T: Scalar> Sub for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: Self) -> TruncSeries<T> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

/// Cauchy product truncated to the shorter order.
impl<T: Scalar> Mul for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: Self) -> TruncSeries<T> {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        TruncSeries::from_fn(n.saturating_sub(1), |k| {
            (0..=k).fold(T::zero(), |acc, j| acc + self.coeffs[j].clone() * rhs.coeffs[k - j].clone())
        })
    }
}
