//! Polynomial families with exact coefficients, their eigen-equations,
//! the q-Laguerre recurrence and the little q-Jacobi orthogonality sum.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{rat_to_f64, rational_string, rpow, LaurentPoly, Rational, SignedLog};
use crate::opalgebra::{operators, LinOp};
use crate::qseries::{classical_coefficients, q_pochhammer, q_pochhammer_inf, HyperSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    LittleQJacobi,
    QLaguerre,
    Minus1Jacobi,
    Jacobi,
    Laguerre,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::LittleQJacobi, Family::QLaguerre, Family::Minus1Jacobi, Family::Jacobi, Family::Laguerre];

    pub fn name(self) -> &'static str {
        match self {
            Family::LittleQJacobi => "little_q_jacobi",
            Family::QLaguerre => "q_laguerre",
            Family::Minus1Jacobi => "minus1_jacobi",
            Family::Jacobi => "jacobi",
            Family::Laguerre => "laguerre",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// One member of a family with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFamilyInstance {
    pub family: Family,
    pub n: u32,
    pub params: BTreeMap<String, Rational>,
    pub coeffs: LaurentPoly<Rational>,
}

impl PolyFamilyInstance {
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.eval(x).expect("family polynomials are proper")
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.coeffs().iter().rev().fold(0.0, |acc, c| acc * x + rat_to_f64(c))
    }

    /// Sum of absolute coefficient values; bounds `|p(x)|` on `|x| <= 1`.
    pub fn abs_coeff_sum(&self) -> f64 {
        self.coeffs.coeffs().iter().map(|c| rat_to_f64(c).abs()).sum()
    }
}

impl Serialize for PolyFamilyInstance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Coeffs<'a>(&'a LaurentPoly<Rational>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(None)?;
                for (d, c) in self.0.terms() {
                    seq.serialize_element(&(d, c.numer().to_string(), c.denom().to_string()))?;
                }
                seq.end()
            }
        }
        struct Params<'a>(&'a BTreeMap<String, Rational>);
        impl Serialize for Params<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_map(self.0.iter().map(|(k, v)| (k, rational_string(v))))
            }
        }
        let mut st = s.serialize_struct("PolyFamilyInstance", 4)?;
        st.serialize_field("family", self.family.name())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("params", &Params(&self.params))?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

fn params(pairs: &[(&str, &Rational)]) -> BTreeMap<String, Rational> {
    pairs.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn nonzero(v: &Rational, what: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::Parameter(format!("{what} vanishes")))
    } else {
        Ok(())
    }
}

/// `p_n(x; a, b | q) = 2Phi1(q^{-n}, abq^{n+1}; aq | q; qx)`.
pub fn little_q_jacobi(n: u32, q: &Rational, a: &Rational, b: &Rational) -> Result<PolyFamilyInstance> {
    nonzero(q, "q")?;
    let spec = HyperSpec::new(
        vec![rpow(q, -(n as i64)), a * b * rpow(q, n as i64 + 1)],
        vec![a * q],
        q.clone(),
        q.clone(),
    );
    let cs = spec.coefficients(n as usize + 1)?;
    let coeffs = LaurentPoly::from_terms(cs.into_iter().enumerate().map(|(k, c)| (k as i64, c * rpow(q, k as i64))));
    Ok(PolyFamilyInstance { family: Family::LittleQJacobi, n, params: params(&[("q", q), ("a", a), ("b", b)]), coeffs })
}

/// `L_n(x, a; q) = (aq;q)_n/(q;q)_n 1phi1(q^{-n}; aq | q; -a q^{n+1} x)`.
pub fn q_laguerre(n: u32, q: &Rational, a: &Rational) -> Result<PolyFamilyInstance> {
    nonzero(q, "q")?;
    let qq = q_pochhammer(q, q, n);
    nonzero(&qq, "(q;q)_n")?;
    let norm = q_pochhammer(&(a * q), q, n) / qq;
    let spec = HyperSpec::new(vec![rpow(q, -(n as i64))], vec![a * q], q.clone(), Rational::one());
    let scale = -(a * rpow(q, n as i64 + 1));
    let cs = spec.coefficients(n as usize + 1)?;
    let coeffs = LaurentPoly::from_terms(
        cs.into_iter().enumerate().map(|(k, c)| (k as i64, c * rpow(&scale, k as i64) * norm.clone())),
    );
    Ok(PolyFamilyInstance { family: Family::QLaguerre, n, params: params(&[("q", q), ("a", a)]), coeffs })
}

/// Terminating `2F1(p1, p2; d; x^2)` as a polynomial in `x`, optionally
/// multiplied by `factor * x`.
fn f21_in_square(p1: Rational, p2: Rational, d: Rational, factor: Rational, odd: bool) -> Result<LaurentPoly<Rational>> {
    if factor.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let terms = (-p1.clone()).to_integer().to_usize().filter(|_| p1.is_integer() && p1 <= Rational::zero());
    let len = terms.ok_or_else(|| Error::Parameter("hypergeometric factor does not terminate".into()))? + 1;
    let cs = classical_coefficients(&[p1, p2], &[d], len)?;
    let shift = i64::from(odd);
    Ok(LaurentPoly::from_terms(cs.into_iter().enumerate().map(|(k, c)| (2 * k as i64 + shift, c * factor.clone()))))
}

/// Little (-1)-Jacobi polynomial from the even/odd hypergeometric formulas;
/// constant term 1.
pub fn minus1_jacobi(n: u32, alpha: &Rational, beta: &Rational) -> Result<PolyFamilyInstance> {
    let one = Rational::one();
    let half = Rational::new(1.into(), 2.into());
    let ap1 = alpha + &one;
    nonzero(&ap1, "alpha + 1")?;
    let nn = int(n as i64);
    let s = alpha + beta;
    let coeffs = if n % 2 == 0 {
        let c2 = (&s + &nn + int(2)) * &half;
        f21_in_square(-(&nn * &half), c2.clone(), &ap1 * &half, one.clone(), false)?
            + f21_in_square(&one - &nn * &half, c2, (alpha + int(3)) * &half, &nn / &ap1, true)?
    } else {
        let m = -((&nn - &one) * &half);
        f21_in_square(m.clone(), (&s + &nn + &one) * &half, &ap1 * &half, one.clone(), false)?
            + f21_in_square(m, (&s + &nn + int(3)) * &half, (alpha + int(3)) * &half, -(&s + &nn + &one) / &ap1, true)?
    };
    Ok(PolyFamilyInstance { family: Family::Minus1Jacobi, n, params: params(&[("alpha", alpha), ("beta", beta)]), coeffs })
}

/// `P_n^{(alpha,beta)}(x) = (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)`.
pub fn jacobi_classical(n: u32, alpha: &Rational, beta: &Rational) -> Result<PolyFamilyInstance> {
    let one = Rational::one();
    let ap1 = alpha + &one;
    let cs = classical_coefficients(&[int(-(n as i64)), int(n as i64) + alpha + beta + &one], &[ap1.clone()], n as usize + 1)?;
    let norm = (0..n).fold(one.clone(), |acc, k| acc * (&ap1 + int(k as i64)) / int(k as i64 + 1));
    let arg = LaurentPoly::from_terms([(0, Rational::new(1.into(), 2.into())), (1, Rational::new((-1).into(), 2.into()))]);
    let series = LaurentPoly::from_coeffs(0, cs).scale(&norm);
    let coeffs = series.compose(&arg)?;
    Ok(PolyFamilyInstance { family: Family::Jacobi, n, params: params(&[("alpha", alpha), ("beta", beta)]), coeffs })
}

/// `L_n^alpha(x) = (alpha+1)_n/n! 1F1(-n; alpha+1; x)`.
pub fn laguerre_classical(n: u32, alpha: &Rational) -> Result<PolyFamilyInstance> {
    let one = Rational::one();
    let ap1 = alpha + &one;
    let cs = classical_coefficients(&[int(-(n as i64))], &[ap1.clone()], n as usize + 1)?;
    let norm = (0..n).fold(one, |acc, k| acc * (&ap1 + int(k as i64)) / int(k as i64 + 1));
    let coeffs = LaurentPoly::from_coeffs(0, cs).scale(&norm);
    Ok(PolyFamilyInstance { family: Family::Laguerre, n, params: params(&[("alpha", alpha)]), coeffs })
}

/// `P_n^{(alpha,beta)}(x)` in floating point by the three-term recurrence.
pub fn jacobi_eval(n: u64, alpha: f64, beta: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let ab = alpha + beta;
    let mut prev = 1.0;
    let mut cur = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
        let next = (a2 * cur - a3 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// Eigenvalue of the family's operator on degree `n`, where one exists.
pub fn eigenvalue(family: Family, n: u32, params: &BTreeMap<String, Rational>) -> Result<Rational> {
    let get = |k: &str| params.get(k).cloned().ok_or_else(|| Error::Parameter(format!("missing parameter {k}")));
    let one = Rational::one();
    match family {
        Family::LittleQJacobi => {
            let (q, a, b) = (get("q")?, get("a")?, get("b")?);
            Ok(rpow(&q, -(n as i64)) * (&one - rpow(&q, n as i64)) * (&one - a * b * rpow(&q, n as i64 + 1)))
        }
        Family::QLaguerre => {
            let (q, a) = (get("q")?, get("a")?);
            Ok(-a * (one - rpow(&q, n as i64)))
        }
        Family::Minus1Jacobi => {
            let (alpha, beta) = (get("alpha")?, get("beta")?);
            Ok(if n % 2 == 0 { -int(n as i64) } else { alpha + beta + int(n as i64 + 1) })
        }
        Family::Jacobi | Family::Laguerre => Err(Error::UnsupportedMode(format!(
            "no exact operator registered for the {} family",
            family.name()
        ))),
    }
}

/// The operator whose eigenfunctions the family members are.
pub fn family_operator(family: Family, params: &BTreeMap<String, Rational>) -> Result<LinOp<Rational>> {
    let get = |k: &str| params.get(k).cloned().ok_or_else(|| Error::Parameter(format!("missing parameter {k}")));
    match family {
        Family::LittleQJacobi => Ok(operators::little_q_jacobi(&get("a")?, &get("b")?, &get("q")?)),
        Family::QLaguerre => Ok(operators::q_laguerre(&get("a")?, &get("q")?)),
        Family::Minus1Jacobi => Ok(operators::minus1_jacobi(&get("alpha")?, &get("beta")?)),
        Family::Jacobi | Family::Laguerre => Err(Error::UnsupportedMode(format!(
            "no exact operator registered for the {} family",
            family.name()
        ))),
    }
}

/// Outcome of an exact eigen-equation check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenReport {
    pub family: String,
    pub n: u32,
    #[serde(serialize_with = "crate::numerics::ser_rational_map")]
    pub params: BTreeMap<String, Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub eigenvalue: Rational,
    pub exact: bool,
}

fn ser_rational<S: Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(v))
}

/// Checks `op p_n = lambda_n p_n` with exact arithmetic.
pub fn eigen_check(p: &PolyFamilyInstance) -> Result<EigenReport> {
    let lambda = eigenvalue(p.family, p.n, &p.params)?;
    let op = family_operator(p.family, &p.params)?;
    let exact = op.apply(&p.coeffs) == p.coeffs.scale(&lambda);
    Ok(EigenReport { family: p.family.name().into(), n: p.n, params: p.params.clone(), eigenvalue: lambda, exact })
}

/// Builds a family member from a named parameter map.
pub fn build(family: Family, n: u32, params: &BTreeMap<String, Rational>) -> Result<PolyFamilyInstance> {
    let get = |k: &str| params.get(k).cloned().ok_or_else(|| Error::Parameter(format!("missing parameter {k}")));
    match family {
        Family::LittleQJacobi => little_q_jacobi(n, &get("q")?, &get("a")?, &get("b")?),
        Family::QLaguerre => q_laguerre(n, &get("q")?, &get("a")?),
        Family::Minus1Jacobi => minus1_jacobi(n, &get("alpha")?, &get("beta")?),
        Family::Jacobi => jacobi_classical(n, &get("alpha")?, &get("beta")?),
        Family::Laguerre => laguerre_classical(n, &get("alpha")?),
    }
}

/// `-a q^{2n+1} x L_n = (1-q^{n+1}) L_{n+1} - [(1-q^{n+1}) + q(1-aq^n)] L_n
/// + q(1-aq^n) L_{n-1}`, exactly, for `n >= 1`.
pub fn q_laguerre_recurrence_holds(n: u32, q: &Rational, a: &Rational) -> Result<bool> {
    if n == 0 {
        return Err(Error::Parameter("recurrence needs n >= 1".into()));
    }
    let one = Rational::one();
    let [lm, l0, lp] = [n - 1, n, n + 1].map(|k| q_laguerre(k, q, a).map(|p| p.coeffs));
    let (lm, l0, lp) = (lm?, l0?, lp?);
    let qn = rpow(q, n as i64);
    let c1 = &one - q * &qn;
    let c2 = q * (&one - a * &qn);
    let lhs = (&LaurentPoly::x() * &l0).scale(&-(a * rpow(q, 2 * n as i64 + 1)));
    let rhs = lp.scale(&c1) - l0.scale(&(&c1 + &c2)) + lm.scale(&c2);
    Ok(lhs == rhs)
}

/// Truncated little q-Jacobi orthogonality sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalitySum {
    pub m: u32,
    pub n: u32,
    pub value: f64,
    /// Bound on the omitted terms `k > K`, prefactor included.
    pub tail_bound: f64,
    /// Closed form: zero off the diagonal.
    pub expected: f64,
}

impl OrthogonalitySum {
    pub fn passes(&self, tol: f64) -> bool {
        (self.value - self.expected).abs() <= tol + self.tail_bound
    }
}

/// `(aq;q)_oo/(abq^2;q)_oo sum_{k=0}^{K} p_m(q^k) p_n(q^k) (aq)^k (bq;q)_k/(q;q)_k`.
///
/// With `M_j` the absolute coefficient sum of `p_j` and
/// `B = (-|b|q;q)_oo/(q;q)_oo >= (bq;q)_k/(q;q)_k`, the tail is at most
/// `prefactor M_m M_n B (aq)^{K+1}/(1 - aq)`.
pub fn orthogonality_sum(m: u32, n: u32, q: &Rational, a: &Rational, b: &Rational, trunc: usize) -> Result<OrthogonalitySum> {
    let one = Rational::one();
    let zero = Rational::zero();
    if !(*q > zero && *q < one && *a > zero && a * q < one && b * q < one) {
        return Err(Error::Parameter(format!("need 0 < q < 1, 0 < a < 1/q, b < 1/q (q={q}, a={a}, b={b})")));
    }
    let pm = little_q_jacobi(m, q, a, b)?;
    let pn = little_q_jacobi(n, q, a, b)?;
    let (qf, af, bf) = (rat_to_f64(q), rat_to_f64(a), rat_to_f64(b));
    let ql = SignedLog::from_f64(qf);
    let tol = 1e-17;
    let prefactor = q_pochhammer_inf(SignedLog::from_f64(af * qf), ql, tol)?.value
        / q_pochhammer_inf(SignedLog::from_f64(af * bf * qf * qf), ql, tol)?.value;
    let mut sum = 0.0;
    let mut weight = 1.0;
    let mut x = 1.0;
    for k in 0..=trunc {
        sum += pm.eval_f64(x) * pn.eval_f64(x) * weight;
        let kf = k as i32;
        weight *= af * qf * (1.0 - bf * qf.powi(kf + 1)) / (1.0 - qf.powi(kf + 1));
        x *= qf;
    }
    let qq = q_pochhammer_inf(ql, ql, tol)?.value;
    let bound_b = q_pochhammer_inf(SignedLog::from_f64(-bf.abs() * qf), ql, tol)?.value / qq;
    let aq = af * qf;
    let tail_bound =
        prefactor.abs() * pm.abs_coeff_sum() * pn.abs_coeff_sum() * bound_b * aq.powi(trunc as i32 + 1) / (1.0 - aq);
    let expected = if m == n {
        let nn = n as i64;
        let abq = a * b * q;
        let norm = (&one - &abq) * rpow(&(a * q), nn) / (&one - &abq * rpow(q, 2 * nn))
            * q_pochhammer(q, q, n)
            * q_pochhammer(&(b * q), q, n)
            / (q_pochhammer(&(a * q), q, n) * q_pochhammer(&abq, q, n));
        rat_to_f64(&norm)
    } else {
        0.0
    };
    Ok(OrthogonalitySum { m, n, value: prefactor * sum, tail_bound, expected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn low_degree_forms() {
        let (q, a, b) = (rat(1, 2), rat(1, 3), rat(3, 4));
        assert_eq!(little_q_jacobi(0, &q, &a, &b).unwrap().coeffs, LaurentPoly::one());
        let one = rat(1, 1);
        let c1 = (&one - rat(2, 1)) * (&one - &a * &b * &q * &q) / ((&one - &a * &q) * (&one - &q)) * &q;
        let expected = LaurentPoly::from_terms([(0, one.clone()), (1, c1)]);
        assert_eq!(little_q_jacobi(1, &q, &a, &b).unwrap().coeffs, expected);
        assert_eq!(q_laguerre(0, &q, &a).unwrap().coeffs, LaurentPoly::one());
        assert_eq!(minus1_jacobi(0, &a, &b).unwrap().coeffs, LaurentPoly::one());
        assert_eq!(jacobi_classical(1, &rat(0, 1), &rat(0, 1)).unwrap().coeffs, LaurentPoly::x());
        let lag = laguerre_classical(1, &a).unwrap().coeffs;
        assert_eq!(lag, LaurentPoly::from_terms([(0, a.clone() + one), (1, rat(-1, 1))]));
    }

    #[test]
    fn jacobi_at_one_and_recurrence_eval() {
        let (alpha, beta) = (rat(1, 3), rat(-1, 4));
        for n in 0..7u32 {
            let p = jacobi_classical(n, &alpha, &beta).unwrap();
            let at_one = (0..n).fold(rat(1, 1), |acc, k| acc * (alpha.clone() + rat(k as i64 + 1, 1)) / rat(k as i64 + 1, 1));
            assert_eq!(p.eval(&rat(1, 1)), at_one);
            for x in [-0.7, 0.1, 0.9] {
                assert!((p.eval_f64(x) - jacobi_eval(n as u64, 1.0 / 3.0, -0.25, x)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn serialized_shape() {
        let p = q_laguerre(1, &rat(1, 2), &rat(1, 3)).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["family"], "q_laguerre");
        assert_eq!(v["params"]["q"], "1/2");
        assert_eq!(v["coeffs"][0][0], 0);
        assert!(v["coeffs"][0][1].is_string());
    }
}
