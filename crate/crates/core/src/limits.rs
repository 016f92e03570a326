//! Limit transitions between the families, certified empirically: each case
//! walks a parameter path toward the limit and records the maximal error at
//! fixed evaluation points.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::{gamma, ln_gamma};

use crate::besselfam::{bessel_norm, cas, minus1_bessel, q_bessel2_norm, q_bessel3_log, q_bessel3_norm};
use crate::error::{Error, Result};
use crate::families::{laguerre_classical, little_q_jacobi, minus1_jacobi, q_laguerre};
use crate::numerics::{parse_rational, rat, rat_to_f64, ser_rational_map, Rational, SignedLog};
use crate::qseries::{q_pochhammer_inf, q_pochhammer_log, NumericSpec, SeriesTol};

/// Errors at or below this level count as converged noise when checking
/// that the error path decreases.
pub const NOISE_FLOOR: f64 = 1e-14;

/// Tolerance for Bessel-valued targets.
pub const DEFAULT_TOLERANCE: f64 = 1e-5;
/// Tolerance for targets with exact rational coefficients.
pub const EXACT_TOLERANCE: f64 = 1e-8;

/// How the path parameter approaches the limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Approach {
    /// Parameter tends to 0 (`eps`, `1 - q`).
    ToZero,
    /// Parameter tends to infinity (`n`, `b`).
    ToInfinity,
}

type ErrorFn = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// One limit transition with its path and evaluation points.
#[derive(Clone)]
pub struct LimitCase {
    pub id: String,
    pub params: BTreeMap<String, Rational>,
    pub path_parameter: &'static str,
    pub approach: Approach,
    pub path: Vec<f64>,
    pub eval_points: Vec<f64>,
    pub tolerance: f64,
    pub note: Option<&'static str>,
    error_at: ErrorFn,
}

impl std::fmt::Debug for LimitCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LimitCase")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("path", &self.path)
            .field("eval_points", &self.eval_points)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitReport {
    pub case_id: String,
    #[serde(serialize_with = "ser_rational_map")]
    pub params: BTreeMap<String, Rational>,
    pub path_parameter: &'static str,
    pub approach: Approach,
    pub path: Vec<f64>,
    pub eval_points: Vec<f64>,
    /// `errors[i] = max_x |source(path[i], x) - target(x)| / max(1, |target(x)|)`.
    pub errors: Vec<f64>,
    /// Observed order in the small parameter from the last two errors above
    /// the noise floor.
    pub rate: Option<f64>,
    pub decreasing: bool,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

/// Strictly decreasing, except that consecutive errors both under the noise
/// floor may tie or wobble.
pub fn is_decreasing(errors: &[f64]) -> bool {
    errors.windows(2).all(|w| w[1] < w[0] || (w[0] <= NOISE_FLOOR && w[1] <= NOISE_FLOOR))
}

fn small_parameter(approach: Approach, p: f64) -> f64 {
    match approach {
        Approach::ToZero => p,
        Approach::ToInfinity => 1.0 / p,
    }
}

fn estimate_rate(approach: Approach, path: &[f64], errors: &[f64]) -> Option<f64> {
    let above: Vec<usize> = (0..errors.len()).filter(|&i| errors[i] > NOISE_FLOOR).collect();
    let (&i, &j) = (above.get(above.len().checked_sub(2)?)?, above.last()?);
    let (hi, hj) = (small_parameter(approach, path[i]), small_parameter(approach, path[j]));
    Some((errors[i] / errors[j]).ln() / (hi / hj).ln())
}

pub fn run_limit(case: &LimitCase) -> Result<LimitReport> {
    if case.path.len() < 3 {
        return Err(Error::Parameter(format!("limit case {} needs a path of length >= 3", case.id)));
    }
    let errors = case
        .path
        .iter()
        .map(|&p| (case.error_at)(p))
        .collect::<Result<Vec<f64>>>()
        .map_err(|e| Error::Limit { case: case.id.clone(), source: Box::new(e) })?;
    let decreasing = is_decreasing(&errors);
    let last = *errors.last().expect("nonempty path");
    Ok(LimitReport {
        case_id: case.id.clone(),
        params: case.params.clone(),
        path_parameter: case.path_parameter,
        approach: case.approach,
        path: case.path.clone(),
        eval_points: case.eval_points.clone(),
        rate: estimate_rate(case.approach, &case.path, &errors),
        decreasing,
        tolerance: case.tolerance,
        passed: decreasing && last < case.tolerance && last.is_finite(),
        errors,
        note: case.note,
    })
}

/// Runs the cases in parallel; reports come back sorted by case id.
pub fn run_all(cases: &[LimitCase]) -> Result<Vec<LimitReport>> {
    let mut out = cases.par_iter().map(run_limit).collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.case_id.cmp(&b.case_id));
    Ok(out)
}

fn pointwise<S, T>(points: Vec<f64>, source: S, target: T) -> ErrorFn
where
    S: Fn(f64, f64) -> Result<f64> + Send + Sync + 'static,
    T: Fn(f64) -> Result<f64> + Send + Sync + 'static,
{
    Arc::new(move |p| {
        let mut worst: f64 = 0.0;
        for &x in &points {
            let t = target(x)?;
            let s = source(p, x)?;
            worst = worst.max((s - t).abs() / t.abs().max(1.0));
        }
        Ok(worst)
    })
}

fn exact(x: f64) -> Rational {
    Rational::from_float(x).expect("finite evaluation point")
}

/// `10^{-first}, 10^{-first-1}, ...`, correctly rounded.
pub fn decade_path(first: u32, count: u32) -> Vec<f64> {
    (first..first + count).map(|k| format!("1e-{k}").parse().expect("decimal literal")).collect()
}

/// `first, first/2, first/4, ...`; exact halvings.
fn halving_path(first: f64, count: usize) -> Vec<f64> {
    std::iter::successors(Some(first), |e| Some(e / 2.0)).take(count).collect()
}

/// `q^n`-scaled little q-Jacobi series `2Phi1(q^{-n}, abq^{n+1}; aq | q; qx)`
/// in floating point.
fn little_q_jacobi_numeric(n: i64, x: f64, a: SignedLog, b: SignedLog, q: SignedLog) -> Result<f64> {
    NumericSpec::new(vec![q.powi(-n), a * b * q.powi(n + 1)], vec![a * q], q, q.value() * x)
        .sum(SeriesTol::default())
        .map(|s| s.value)
}

/// `(1 - q^2)` for `q = -e^s`, accurate for small `s`.
fn one_minus_q_squared(s: f64) -> f64 {
    -(2.0 * s).exp_m1()
}

struct Params {
    map: BTreeMap<String, Rational>,
}

impl Params {
    fn new(defaults: &[(&str, Rational)], overrides: &BTreeMap<String, Rational>, id: &str) -> Result<Self> {
        let mut map: BTreeMap<String, Rational> = defaults.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        for (k, v) in overrides {
            if !map.contains_key(k) {
                return Err(Error::Parameter(format!("limit case {id} has no parameter {k:?}")));
            }
            map.insert(k.clone(), v.clone());
        }
        Ok(Self { map })
    }

    fn rat(&self, k: &str) -> Rational {
        self.map[k].clone()
    }

    fn f(&self, k: &str) -> f64 {
        rat_to_f64(&self.map[k])
    }

    fn n(&self, k: &str) -> Result<u32> {
        let v = &self.map[k];
        if v.is_integer() && *v >= rat(0, 1) && *v <= rat(64, 1) {
            Ok(rat_to_f64(v) as u32)
        } else {
            Err(Error::Parameter(format!("{k} must be an integer in 0..=64")))
        }
    }
}

/// Registered case ids, in report order.
pub const CASE_IDS: [&str; 10] = [
    "bessoula",
    "bessoula_cas",
    "diagram_composite",
    "jacobi_to_bessel",
    "little_q_jacobi_to_minus1_jacobi",
    "little_q_jacobi_to_q_bessel3",
    "little_q_jacobi_to_q_laguerre",
    "q_bessel3_to_bessel",
    "q_laguerre_to_laguerre",
    "q_laguerre_to_q_bessel2",
];

/// All registered cases at their default parameters.
pub fn registered_cases() -> Result<Vec<LimitCase>> {
    CASE_IDS.iter().map(|id| build_case(id, &BTreeMap::new())).collect()
}

/// Builds a registered case, overriding default parameters by name.
pub fn build_case(id: &str, overrides: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    match id {
        "little_q_jacobi_to_q_bessel3" => little_q_jacobi_to_q_bessel3(overrides),
        "bessoula" => bessoula(overrides),
        "bessoula_cas" => bessoula_cas(overrides),
        "little_q_jacobi_to_minus1_jacobi" => little_q_jacobi_to_minus1_jacobi(overrides),
        "jacobi_to_bessel" => jacobi_to_bessel(overrides),
        "little_q_jacobi_to_q_laguerre" => little_q_jacobi_to_q_laguerre(overrides),
        "q_laguerre_to_q_bessel2" => q_laguerre_to_q_bessel2(overrides),
        "q_laguerre_to_laguerre" => q_laguerre_to_laguerre(overrides),
        "q_bessel3_to_bessel" => q_bessel3_to_bessel(overrides),
        "diagram_composite" => diagram_composite(overrides),
        _ => Err(Error::Parameter(format!("unknown limit case {id:?}"))),
    }
}

/// `p_n(q^n x; a, b | q) -> J3(x, a; q)` as `n -> oo`, exact polynomials.
fn little_q_jacobi_to_q_bessel3(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "little_q_jacobi_to_q_bessel3";
    let p = Params::new(&[("q", rat(1, 3)), ("a", rat(1, 4)), ("b", rat(1, 5))], o, id)?;
    let (q, a, b) = (p.rat("q"), p.rat("a"), p.rat("b"));
    let (qf, af) = (p.f("q"), p.f("a"));
    let points = vec![0.2, 1.0, 3.0];
    let error_at = pointwise(
        points.clone(),
        move |n, x| {
            let n = n as u32;
            let poly = little_q_jacobi(n, &q, &a, &b)?;
            let arg = crate::numerics::rpow(&q, n as i64) * rational_point(x);
            Ok(rat_to_f64(&poly.eval(&arg)))
        },
        move |x| q_bessel3_norm(x, af, qf),
    );
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "n",
        approach: Approach::ToInfinity,
        path: vec![4.0, 8.0, 16.0, 24.0],
        eval_points: points,
        tolerance: DEFAULT_TOLERANCE,
        note: None,
        error_at,
    })
}

/// Decimal evaluation points as the rationals they denote.
fn rational_point(x: f64) -> Rational {
    parse_rational(&format!("{x}")).unwrap_or_else(|_| exact(x))
}

/// `J3((1-q^2) x, a; q) -> J_{alpha,-1}(x)` with `q = -e^{-eps}`,
/// `a = -e^{-eps(2 alpha + 1)}`.
fn bessoula_error(alpha: f64, points: Vec<f64>, target: impl Fn(f64) -> Result<f64> + Send + Sync + 'static) -> ErrorFn {
    pointwise(
        points,
        move |eps, x| {
            let s = -eps;
            let q = SignedLog::neg_exp(s);
            let a = SignedLog::neg_exp(s * (2.0 * alpha + 1.0));
            q_bessel3_log(one_minus_q_squared(s) * x, a, q, SeriesTol::default())
        },
        target,
    )
}

const BESSOULA_NOTE: &str = "approached through |q| < 1 (q = -e^{-eps}); the argument is scaled by 1 - q^2";

fn bessoula(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "bessoula";
    let p = Params::new(&[("alpha", rat(1, 4))], o, id)?;
    let alpha = p.f("alpha");
    if alpha <= -1.0 {
        return Err(Error::Parameter("alpha must exceed -1".into()));
    }
    let points = vec![-1.5, 0.3, 0.9, 2.0];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "eps",
        approach: Approach::ToZero,
        path: halving_path(0.2, 18),
        eval_points: points.clone(),
        tolerance: DEFAULT_TOLERANCE,
        note: Some(BESSOULA_NOTE),
        error_at: bessoula_error(alpha, points, move |x| minus1_bessel(alpha, x)),
    })
}

fn bessoula_cas(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "bessoula_cas";
    let p = Params::new(&[], o, id)?;
    let points = vec![-1.5, 0.3, 0.9, 2.0];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "eps",
        approach: Approach::ToZero,
        path: halving_path(0.2, 18),
        eval_points: points.clone(),
        tolerance: DEFAULT_TOLERANCE,
        note: Some(BESSOULA_NOTE),
        error_at: bessoula_error(-0.5, points, |x| Ok(cas(x))),
    })
}

/// `p_n(x; -e^{eps alpha}, -e^{eps beta} | -e^eps) -> P_n^{(alpha,beta,-1)}(x)`.
fn little_q_jacobi_to_minus1_jacobi(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "little_q_jacobi_to_minus1_jacobi";
    let p = Params::new(&[("n", rat(5, 1)), ("alpha", rat(1, 2)), ("beta", rat(3, 2))], o, id)?;
    let n = p.n("n")?;
    let target = minus1_jacobi(n, &p.rat("alpha"), &p.rat("beta"))?;
    let (alpha, beta) = (p.f("alpha"), p.f("beta"));
    let points = vec![-0.75, 0.25, 0.5, 0.875];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "eps",
        approach: Approach::ToZero,
        path: decade_path(1, 10),
        eval_points: points.clone(),
        tolerance: EXACT_TOLERANCE,
        note: None,
        error_at: pointwise(
            points,
            move |eps, x| {
                let q = SignedLog::neg_exp(eps);
                let a = SignedLog::neg_exp(eps * alpha);
                let b = SignedLog::neg_exp(eps * beta);
                little_q_jacobi_numeric(n as i64, x, a, b, q)
            },
            move |x| Ok(target.eval_f64(x)),
        ),
    })
}

/// `Gamma(alpha+1) n^{-alpha} P_n^{(alpha,beta)}(1 - x^2/(2n^2)) -> J_alpha(x)`.
fn jacobi_to_bessel(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "jacobi_to_bessel";
    let p = Params::new(&[("alpha", rat(1, 2)), ("beta", rat(3, 2))], o, id)?;
    let (alpha, beta) = (p.f("alpha"), p.f("beta"));
    if alpha <= -1.0 || beta <= -1.0 {
        return Err(Error::Parameter("alpha and beta must exceed -1".into()));
    }
    let points = vec![0.5, 1.0, 2.5];
    let scale = gamma(alpha + 1.0);
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "n",
        approach: Approach::ToInfinity,
        path: vec![1e2, 1e3, 1e4, 1e5, 1e6],
        eval_points: points.clone(),
        tolerance: DEFAULT_TOLERANCE,
        note: None,
        error_at: pointwise(
            points,
            move |n, x| Ok(scale / n.powf(alpha) * jacobi_near_one(n, alpha, beta, x * x / (2.0 * n * n))),
            move |x| bessel_norm(alpha, x),
        ),
    })
}

/// `P_n^{(alpha,beta)}(1 - d)` from `binom(n+alpha, n) 2F1(-n, n+alpha+beta+1; alpha+1; d/2)`,
/// which keeps full accuracy for tiny `d`.
fn jacobi_near_one(n: f64, alpha: f64, beta: f64, d: f64) -> f64 {
    let binom = (ln_gamma(n + alpha + 1.0) - ln_gamma(n + 1.0) - ln_gamma(alpha + 1.0)).exp();
    let (mut term, mut sum) = (1.0, 1.0);
    let mut k = 0.0;
    while k < n {
        term *= (k - n) * (k + n + alpha + beta + 1.0) / ((k + alpha + 1.0) * (k + 1.0)) * d / 2.0;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        k += 1.0;
    }
    binom * sum
}

/// `(aq;q)_n/(q;q)_n p_n(-x/(qb); a, b | q) -> L_n(x, a; q)` as `b -> oo`,
/// in exact arithmetic.
fn little_q_jacobi_to_q_laguerre(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "little_q_jacobi_to_q_laguerre";
    let p = Params::new(&[("n", rat(3, 1)), ("q", rat(1, 3)), ("a", rat(1, 4))], o, id)?;
    let n = p.n("n")?;
    let (q, a) = (p.rat("q"), p.rat("a"));
    let target = q_laguerre(n, &q, &a)?;
    let norm = crate::qseries::q_pochhammer(&(&a * &q), &q, n) / crate::qseries::q_pochhammer(&q, &q, n);
    let points = vec![0.3, 1.0, 2.0];
    let pts = points.clone();
    let error_at: ErrorFn = Arc::new(move |b: f64| {
        let b = exact(b);
        let poly = little_q_jacobi(n, &q, &a, &b)?;
        let mut worst: f64 = 0.0;
        for &x in &pts {
            let x = rational_point(x);
            let t = target.eval(&x);
            let diff = &norm * poly.eval(&(-&x / (&q * &b))) - &t;
            worst = worst.max(rat_to_f64(&diff).abs() / rat_to_f64(&t).abs().max(1.0));
        }
        Ok(worst)
    });
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "b",
        approach: Approach::ToInfinity,
        path: vec![1e2, 1e4, 1e6, 1e8, 1e10, 1e12],
        eval_points: points,
        tolerance: EXACT_TOLERANCE,
        note: None,
        error_at,
    })
}

/// `L_n(x, a; q) -> (aq;q)_oo/(q;q)_oo J2(x; a; q)` as `n -> oo`.
fn q_laguerre_to_q_bessel2(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "q_laguerre_to_q_bessel2";
    let p = Params::new(&[("q", rat(1, 3)), ("a", rat(1, 4))], o, id)?;
    let (q, a) = (p.rat("q"), p.rat("a"));
    let (qf, af) = (p.f("q"), p.f("a"));
    let (ql, al) = (SignedLog::from_f64(qf), SignedLog::from_f64(af));
    let prefactor = q_pochhammer_inf(al * ql, ql, 1e-18)?.value / q_pochhammer_inf(ql, ql, 1e-18)?.value;
    let points = vec![0.3, 1.0, 2.5];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "n",
        approach: Approach::ToInfinity,
        path: vec![5.0, 10.0, 20.0, 30.0],
        eval_points: points.clone(),
        tolerance: DEFAULT_TOLERANCE,
        note: None,
        error_at: pointwise(
            points,
            move |n, x| Ok(rat_to_f64(&q_laguerre(n as u32, &q, &a)?.eval(&rational_point(x)))),
            move |x| Ok(prefactor * q_bessel2_norm(x, af, qf)?),
        ),
    })
}

/// `L_n((1-q) x, q^alpha; q) -> L_n^alpha(x)` with `q = e^{-eps}`.
fn q_laguerre_to_laguerre(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "q_laguerre_to_laguerre";
    let p = Params::new(&[("n", rat(3, 1)), ("alpha", rat(1, 2))], o, id)?;
    let n = p.n("n")?;
    let target = laguerre_classical(n, &p.rat("alpha"))?;
    let alpha = p.f("alpha");
    let points = vec![0.5, 1.5, 3.0];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "eps",
        approach: Approach::ToZero,
        path: decade_path(1, 10),
        eval_points: points.clone(),
        tolerance: EXACT_TOLERANCE,
        note: Some("argument scaled by 1 - q"),
        error_at: pointwise(
            points,
            move |eps, x| {
                let q = SignedLog::exp(-eps);
                let a = SignedLog::exp(-eps * alpha);
                let aq = a * q;
                let norm = q_pochhammer_log(aq, q, n) / q_pochhammer_log(q, q, n);
                let z = -(a * q.powi(n as i64 + 1)).value() * q.one_minus() * x;
                let sum = NumericSpec::new(vec![q.powi(-(n as i64))], vec![aq], q, z).sum(SeriesTol::default())?;
                Ok(norm * sum.value)
            },
            move |x| Ok(target.eval_f64(x)),
        ),
    })
}

/// `J3((1-q)^2 x, q^alpha; q) -> J_alpha(2 sqrt x)` with `q = 1 - h`.
fn q_bessel3_to_bessel(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "q_bessel3_to_bessel";
    let p = Params::new(&[("alpha", rat(1, 2))], o, id)?;
    let alpha = p.f("alpha");
    if alpha <= -1.0 {
        return Err(Error::Parameter("alpha must exceed -1".into()));
    }
    let points = vec![0.2, 0.7, 2.0];
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "one_minus_q",
        approach: Approach::ToZero,
        path: decade_path(1, 7),
        eval_points: points.clone(),
        tolerance: DEFAULT_TOLERANCE,
        note: None,
        error_at: pointwise(
            points,
            move |h, x| {
                let lq = (-h).ln_1p();
                q_bessel3_log(h * h * x, SignedLog::exp(alpha * lq), SignedLog::exp(lq), SeriesTol::default())
            },
            move |x| bessel_norm(alpha, 2.0 * x.sqrt()),
        ),
    })
}

/// Both routes from little q-Jacobi to `J_{alpha,-1}`: through `J3` at
/// `q = -e^{-eps}` directly, and through `p_n(q^n (1-q^2) x; a, b | q)` with
/// `n` large enough that `|q|^n < e^{-60}`.
fn diagram_composite(o: &BTreeMap<String, Rational>) -> Result<LimitCase> {
    let id = "diagram_composite";
    let p = Params::new(&[("alpha", rat(1, 4)), ("beta", rat(1, 2))], o, id)?;
    let (alpha, beta) = (p.f("alpha"), p.f("beta"));
    if alpha <= -1.0 {
        return Err(Error::Parameter("alpha must exceed -1".into()));
    }
    let points = vec![-1.5, 0.3, 0.9, 2.0];
    let direct = bessoula_error(alpha, points.clone(), move |x| minus1_bessel(alpha, x));
    let via_polynomials = pointwise(
        points.clone(),
        move |eps, x| {
            let s = -eps;
            let q = SignedLog::neg_exp(s);
            let a = SignedLog::neg_exp(s * (2.0 * alpha + 1.0));
            let b = SignedLog::neg_exp(s * beta);
            let n = (60.0 / eps).ceil() as i64;
            let arg = q.powi(n).value() * one_minus_q_squared(s) * x;
            little_q_jacobi_numeric(n, arg, a, b, q)
        },
        move |x| minus1_bessel(alpha, x),
    );
    Ok(LimitCase {
        id: id.into(),
        params: p.map,
        path_parameter: "eps",
        approach: Approach::ToZero,
        path: halving_path(0.2, 18),
        eval_points: points,
        tolerance: DEFAULT_TOLERANCE,
        note: Some(
            "composite route little q-Jacobi -> J3 -> J_{alpha,-1}; the direct (-1)-Jacobi -> (-1)-Bessel arrow has no scaling and is not run",
        ),
        error_at: Arc::new(move |eps| Ok(direct(eps)?.max(via_polynomials(eps)?))),
    })
}

/// Elementary q-shifted factorial limits at `q = -e^eps`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QShiftedReport {
    pub alpha: f64,
    pub n: u32,
    pub path: Vec<f64>,
    /// Relative errors of `eps^{-floor(n/2)} (-e^{eps alpha}; -e^eps)_n`.
    pub even_errors: Vec<f64>,
    /// Relative errors of `eps^{-floor((n+1)/2)} (e^{eps alpha}; -e^eps)_n`.
    pub odd_errors: Vec<f64>,
    pub passed: bool,
}

/// Rising factorial `(x)_k`.
fn rising(x: f64, k: u32) -> f64 {
    (0..k).map(|j| x + j as f64).product()
}

pub fn qshifted_limit_check(alpha: f64, n: u32, eps_path: &[f64]) -> Result<QShiftedReport> {
    if n > 12 {
        return Err(Error::Parameter(format!("n must be at most 12, got {n}")));
    }
    if eps_path.len() < 3 || eps_path.iter().any(|e| !(*e > 0.0)) {
        return Err(Error::Parameter("need at least 3 positive eps values".into()));
    }
    let (h, h1) = (n / 2, (n + 1) / 2);
    let sign = |k: u32| if k % 2 == 0 { 1.0 } else { -1.0 };
    let even_target = sign(h) * 2f64.powi(n as i32) * rising((alpha + 1.0) / 2.0, h);
    let odd_target = sign(h1) * 2f64.powi(n as i32) * rising(alpha / 2.0, h1);
    let rel = |v: f64, t: f64| (v - t).abs() / t.abs().max(1.0);
    let mut even_errors = Vec::with_capacity(eps_path.len());
    let mut odd_errors = Vec::with_capacity(eps_path.len());
    for &eps in eps_path {
        let q = SignedLog::neg_exp(eps);
        let even = q_pochhammer_log(SignedLog::neg_exp(eps * alpha), q, n) / eps.powi(h as i32);
        let odd = q_pochhammer_log(SignedLog::exp(eps * alpha), q, n) / eps.powi(h1 as i32);
        even_errors.push(rel(even, even_target));
        odd_errors.push(rel(odd, odd_target));
    }
    let ok = |e: &[f64]| is_decreasing(e) && *e.last().expect("nonempty") < EXACT_TOLERANCE;
    Ok(QShiftedReport { alpha, n, path: eps_path.to_vec(), passed: ok(&even_errors) && ok(&odd_errors), even_errors, odd_errors })
}
