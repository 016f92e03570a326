//! C ABI over `qbessel`.
//!
//! Every function returns a [`QbStatus`]; results go through out-pointers.
//! On failure the message is kept per thread and read back with
//! [`qb_last_error_message`]. Strings handed out by this library are owned
//! by the caller and released with [`qb_string_free`].

use std::cell::RefCell;
use std::collections::BTreeMap;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qbessel::besselfam::{bessel_norm, minus1_bessel, q_bessel3_norm};
use qbessel::numerics::{parse_rational, rat_to_f64, rational_string, Rational};
use qbessel::opalgebra::{
    casimir_value_of, check_all, rep_dunkl, rep_little_q_jacobi, rep_minus1_jacobi, rep_qbessel2, rep_qbessel3,
    rep_qlaguerre, Representation,
};
use qbessel::report::run_battery;
use qbessel::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QbStatus {
    Ok = 0,
    Domain = 1,
    Parameter = 2,
    UnsupportedMode = 3,
    Divergence = 4,
    TruncationCap = 5,
    SpanFailure = 6,
    NotCentral = 7,
    Accuracy = 8,
    Parse = 9,
    Limit = 10,
    NullPointer = 11,
    InvalidUtf8 = 12,
    Panic = 13,
}

impl From<&Error> for QbStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Domain(_) => QbStatus::Domain,
            Error::Parameter(_) => QbStatus::Parameter,
            Error::UnsupportedMode(_) => QbStatus::UnsupportedMode,
            Error::Divergence(_) => QbStatus::Divergence,
            Error::TruncationCap { .. } => QbStatus::TruncationCap,
            Error::SpanFailure { .. } => QbStatus::SpanFailure,
            Error::NotCentral { .. } => QbStatus::NotCentral,
            Error::Accuracy { .. } => QbStatus::Accuracy,
            Error::Parse(_) => QbStatus::Parse,
            Error::Limit { .. } => QbStatus::Limit,
        }
    }
}

/// Opaque handle to an operator representation.
pub struct QbRepresentation {
    inner: Representation,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    Utf8(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> QbStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QbStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            QbStatus::from(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer passed for {what}"));
            QbStatus::NullPointer
        }
        Ok(Err(Failure::Utf8(what))) => {
            set_error(format!("{what} is not valid UTF-8"));
            QbStatus::InvalidUtf8
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            QbStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::Utf8(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Error::Domain(e.to_string()))?;
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    out.write(c.into_raw());
    Ok(())
}

fn parse_params(spec: &str) -> Result<BTreeMap<String, Rational>, Error> {
    let mut map = BTreeMap::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{item}`")))?;
        map.insert(k.trim().to_string(), parse_rational(v)?);
    }
    Ok(map)
}

fn build_representation(name: &str, params: &BTreeMap<String, Rational>) -> Result<Representation, Error> {
    let allowed: &[&str] = match name {
        "little_q_jacobi" => &["q", "a", "b", "r"],
        "minus1_jacobi" => &["alpha", "beta"],
        "dunkl" => &["alpha"],
        "q_bessel3" | "q_laguerre" | "q_bessel2" => &["q", "a"],
        _ => return Err(Error::Parameter(format!("unknown representation `{name}`"))),
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::Parameter(format!("{name} does not take `{k}`")));
    }
    let get = |k: &str| params.get(k).ok_or_else(|| Error::Parameter(format!("{name} needs `{k}`")));
    match name {
        "little_q_jacobi" => rep_little_q_jacobi(get("q")?, get("a")?, get("b")?, get("r")?),
        "minus1_jacobi" => rep_minus1_jacobi(get("alpha")?, get("beta")?),
        "dunkl" => rep_dunkl(get("alpha")?),
        "q_bessel3" => rep_qbessel3(get("q")?, get("a")?),
        "q_laguerre" => rep_qlaguerre(get("q")?, get("a")?),
        _ => rep_qbessel2(get("q")?, get("a")?),
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn qb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Normalized Bessel function `Gamma(alpha+1) (t/2)^-alpha J_alpha(t)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_bessel_norm(alpha: f64, t: f64, out: *mut f64) -> QbStatus {
    guard(|| write(out, bessel_norm(alpha, t)?, "out"))
}

/// The (-1)-Bessel function.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_minus1_bessel(alpha: f64, t: f64, out: *mut f64) -> QbStatus {
    guard(|| write(out, minus1_bessel(alpha, t)?, "out"))
}

/// Normalized third q-Bessel function at `x` with parameters `a`, `q`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_q_bessel3(x: f64, a: f64, q: f64, out: *mut f64) -> QbStatus {
    guard(|| write(out, q_bessel3_norm(x, a, q)?, "out"))
}

/// Build a representation by name (`little_q_jacobi`, `minus1_jacobi`,
/// `q_bessel3`, `dunkl`, `q_laguerre`, `q_bessel2`) from exact parameters
/// written as `"q=1/2,a=1/3"`.
///
/// # Safety
/// `name` and `params` must be nul-terminated strings; `out` must be valid
/// for writes. Release the handle with [`qb_representation_free`].
#[no_mangle]
pub unsafe extern "C" fn qb_representation_new(
    name: *const c_char,
    params: *const c_char,
    out: *mut *mut QbRepresentation,
) -> QbStatus {
    guard(|| {
        let name = read_str(name, "name")?;
        let params = parse_params(read_str(params, "params")?)?;
        let inner = build_representation(name, &params)?;
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        out.write(Box::into_raw(Box::new(QbRepresentation { inner })));
        Ok(())
    })
}

/// # Safety
/// `rep` must be null or a handle from [`qb_representation_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qb_representation_free(rep: *mut QbRepresentation) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// Number of defining relations of `rep`.
///
/// # Safety
/// `rep` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_representation_relation_count(rep: *const QbRepresentation, out: *mut usize) -> QbStatus {
    guard(|| {
        let rep = rep.as_ref().ok_or(Failure::Null("rep"))?;
        write(out, rep.inner.relations.len(), "out")
    })
}

/// Check every relation exactly on monomials up to `max_degree`; sets
/// `passed` and returns nothing else.
///
/// # Safety
/// `rep` must be a live handle; `passed` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qb_representation_verify(
    rep: *const QbRepresentation,
    max_degree: i64,
    passed: *mut bool,
) -> QbStatus {
    guard(|| {
        let rep = rep.as_ref().ok_or(Failure::Null("rep"))?;
        let reports = check_all(&rep.inner, max_degree)?;
        write(passed, reports.iter().all(|r| r.exact_match), "passed")
    })
}

/// Relation reports for `rep` as a JSON array.
///
/// # Safety
/// `rep` must be a live handle; `out` must be valid for writes. Free the
/// returned string with [`qb_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qb_representation_verify_json(
    rep: *const QbRepresentation,
    max_degree: i64,
    out: *mut *mut c_char,
) -> QbStatus {
    guard(|| {
        let rep = rep.as_ref().ok_or(Failure::Null("rep"))?;
        let reports = check_all(&rep.inner, max_degree)?;
        let json = serde_json::to_string(&reports).map_err(|e| Error::Domain(e.to_string()))?;
        write_string(out, json)
    })
}

/// Scalar value of the first Casimir, as a float and as an exact `p/q`
/// string. Either out-pointer may be null.
///
/// # Safety
/// `rep` must be a live handle; non-null out-pointers must be valid for
/// writes. Free `exact` with [`qb_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qb_representation_casimir(
    rep: *const QbRepresentation,
    max_degree: i64,
    value: *mut f64,
    exact: *mut *mut c_char,
) -> QbStatus {
    guard(|| {
        let rep = rep.as_ref().ok_or(Failure::Null("rep"))?;
        let def = rep
            .inner
            .casimirs
            .first()
            .ok_or_else(|| Error::Parameter(format!("{} has no Casimir", rep.inner.name)))?;
        let v = casimir_value_of(def, max_degree)?;
        if !value.is_null() {
            value.write(rat_to_f64(&v));
        }
        if !exact.is_null() {
            write_string(exact, rational_string(&v))?;
        }
        Ok(())
    })
}

/// Full verification battery as JSON; `passed` receives the overall verdict.
///
/// # Safety
/// `out` and `passed` must be valid for writes. Free `out` with
/// [`qb_string_free`].
#[no_mangle]
pub unsafe extern "C" fn qb_report_json(seed: u64, out: *mut *mut c_char, passed: *mut bool) -> QbStatus {
    guard(|| {
        let report = run_battery(seed)?;
        let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Domain(e.to_string()))?;
        write(passed, report.passed, "passed")?;
        write_string(out, json)
    })
}
