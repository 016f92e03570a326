use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{rpow, Scalar};
use crate::error::{Error, Result};

/// Finite Laurent polynomial `sum_d coeffs[d - min_degree] x^d`.
///
/// Stored trimmed: the first and last coefficients are nonzero, and the
/// zero polynomial is the empty list with `min_degree = 0`.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<T> {
    min_degree: i64,
    coeffs: Vec<T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { min_degree: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: T, degree: i64) -> Self {
        Self::from_coeffs(degree, vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn from_coeffs(min_degree: i64, coeffs: Vec<T>) -> Self {
        let mut p = Self { min_degree, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated
    /// degrees are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(terms: I) -> Self {
        let terms: Vec<(i64, T)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![T::zero(); (hi - lo + 1) as usize];
        for (d, c) in terms {
            let slot = &mut coeffs[(d - lo) as usize];
            *slot = slot.clone() + c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_degree += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Highest degree with a nonzero coefficient, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_degree + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, degree: i64) -> T {
        let idx = degree - self.min_degree;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            T::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_degree + i as i64, c))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_proper(&self) -> bool {
        self.min_degree >= 0
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.min_degree, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    /// `f(x) -> f(c x)`.
    pub fn dilate(&self, c: &T) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.clone() * rpow(c, self.min_degree + i as i64))
            .collect();
        Self::from_coeffs(self.min_degree, coeffs)
    }

    /// `f(x) -> f(-x)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| if (self.min_degree + i as i64) % 2 == 0 { a.clone() } else { -a.clone() })
            .collect();
        Self { min_degree: self.min_degree, coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms().map(|(d, c)| (d - 1, c.clone() * from_i64::<T>(d))))
    }

    pub fn even_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|(d, _)| d % 2 == 0).map(|(d, c)| (d, c.clone())))
    }

    pub fn odd_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|(d, _)| d % 2 != 0).map(|(d, c)| (d, c.clone())))
    }

    /// `p(q(x))` for a proper `self`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !self.is_proper() {
            return Err(Error::Domain("composition needs a polynomial without negative powers".into()));
        }
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        Ok(acc.shift_power(inner, self.min_degree))
    }

    fn shift_power(self, inner: &Self, times: i64) -> Self {
        (0..times).fold(self, |acc, _| &acc * inner)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        LaurentPoly::from_coeffs(self.min_degree, self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &T) -> Result<T> {
        poly_eval(self, x)
    }
}

pub fn from_i64<T: Scalar>(n: i64) -> T {
    let mut acc = T::zero();
    let mut unit = T::one();
    let mut m = n.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            acc = acc + unit.clone();
        }
        unit = unit.clone() + unit;
        m >>= 1;
    }
    if n < 0 {
        -acc
    } else {
        acc
    }
}

/// Evaluates `p` at `x`; fails if `x = 0` and `p` has negative powers.
pub fn poly_eval<T: Scalar>(p: &LaurentPoly<T>, x: &T) -> Result<T> {
    if p.is_zero() {
        return Ok(T::zero());
    }
    if x.is_zero() && p.min_degree < 0 {
        return Err(Error::Domain("evaluation at 0 of a polynomial with negative powers".into()));
    }
    let mut acc = T::zero();
    for c in p.coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    Ok(acc * rpow(x, p.min_degree))
}

pub fn poly_is_proper<T: Scalar>(p: &LaurentPoly<T>) -> bool {
    p.is_proper()
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_degree.min(rhs.min_degree);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { min_degree: self.min_degree, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::from_coeffs(self.min_degree + rhs.min_degree, coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: Self) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<T: Scalar> fmt::Debug for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(d, c)| format!("({c:?})x^{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rat, Rational};

    fn p(min: i64, c: &[(i64, i64)]) -> LaurentPoly<Rational> {
        LaurentPoly::from_coeffs(min, c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn canonical_zero() {
        let z = p(-3, &[(0, 1), (0, 1)]);
        assert!(z.is_zero());
        assert_eq!(z.min_degree(), 0);
        assert_eq!(z, LaurentPoly::zero());
        let a = p(-2, &[(0, 1), (1, 1), (0, 1)]);
        assert_eq!(a.min_degree(), -1);
        assert_eq!(a.degree(), Some(-1));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(poly_eval(&LaurentPoly::one(), &rat(7, 1)).unwrap(), rat(1, 1));
        // x - x^{-1} at 2
        let q = p(-1, &[(-1, 1), (0, 1), (1, 1)]);
        assert_eq!(poly_eval(&q, &rat(2, 1)).unwrap(), rat(3, 2));
        assert!(matches!(poly_eval(&q, &rat(0, 1)), Err(Error::Domain(_))));
        assert!(poly_eval(&p(0, &[(1, 1), (1, 1)]), &rat(0, 1)).is_ok());
    }

    #[test]
    fn proper() {
        assert!(poly_is_proper(&LaurentPoly::<Rational>::zero()));
        assert!(!poly_is_proper(&LaurentPoly::monomial(rat(1, 1), -1)));
    }

    #[test]
    fn dilate_reflect_derivative() {
        let x3 = LaurentPoly::monomial(rat(1, 1), 3);
        assert_eq!(x3.dilate(&rat(1, 2)), LaurentPoly::monomial(rat(1, 8), 3));
        let f = p(1, &[(1, 1), (1, 1)]);
        assert_eq!(f.reflect(), p(1, &[(-1, 1), (1, 1)]));
        assert_eq!(x3.derivative(), LaurentPoly::monomial(rat(3, 1), 2));
        let inv = LaurentPoly::monomial(rat(1, 1), -1);
        assert_eq!(inv.derivative(), LaurentPoly::monomial(rat(-1, 1), -2));
    }

    #[test]
    fn compose_substitution() {
        // (1 + x)^2 evaluated through composition with x -> x^2
        let f = p(0, &[(1, 1), (2, 1), (1, 1)]);
        let sq = LaurentPoly::monomial(rat(1, 1), 2);
        let g = f.compose(&sq).unwrap();
        assert_eq!(g, p(0, &[(1, 1), (0, 1), (2, 1), (0, 1), (1, 1)]));
        let shifted = LaurentPoly::monomial(rat(1, 1), 2).compose(&p(0, &[(1, 1), (1, 1)])).unwrap();
        assert_eq!(shifted, p(0, &[(1, 1), (2, 1), (1, 1)]));
    }
}
