use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Complex number with exact rational parts.
pub type ComplexExact = Complex<Rational>;

/// Coefficient field for polynomials and operators.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = Self> + Send + Sync {}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer power, negative exponents allowed.
pub fn rpow<T: Scalar>(base: &T, exp: i64) -> T {
    let mut acc = T::one();
    let mut b = if exp < 0 { T::one() / base.clone() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b;
        e >>= 1;
    }
    acc
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `"p/q"` for non-integers, `"p"` otherwise.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serializes a name -> rational map with values as `"p/q"` strings.
pub fn ser_rational_map<S: serde::Serializer>(
    map: &std::collections::BTreeMap<String, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k, rational_string(v))))
}

/// Parses `"p/q"` or an integer. Decimal strings are rejected: exact
/// checks never go through float parsing.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an exact rational (expected p/q or an integer)"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rational::new(n, d))
}

/// Parses a decimal float or an exact rational string.
pub fn parse_real(s: &str) -> Result<f64> {
    if let Ok(r) = parse_rational(s) {
        return Ok(rat_to_f64(&r));
    }
    s.trim()
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::Parse(format!("`{s}` is not a finite number")))
}
