//! Command-line front end. [`run`] parses arguments and returns the exit
//! code together with the text for stdout and stderr, so the binary is a
//! thin wrapper and everything is testable in-process.
//!
//! Exit codes: 0 when every check passed or a value was printed, 1 when a
//! check failed (the JSON report is still printed), 2 on usage errors.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::besselfam::{
    bessel_j, bessel_norm, cas, dunkl_kernel, jackson_q_bessel, minus1_bessel, q_bessel2_log, q_bessel3_exact,
    q_bessel3_log, JacksonKind,
};
use crate::error::{Error, Result};
use crate::families::{build, eigen_check, Family};
use crate::limits::{build_case, decade_path, qshifted_limit_check, run_limit, CASE_IDS};
use crate::numerics::{parse_rational, parse_real, rational_string, Rational, SignedLog};
use crate::opalgebra::{
    casimir_value_of, check_relation, check_relation_def, daha_check, intertwining_check, qbessel2_yx_relation,
    rep_dunkl, rep_little_q_jacobi, rep_minus1_jacobi, rep_qbessel2, rep_qbessel3, rep_qlaguerre, Representation,
    DEFAULT_SEED,
};
use crate::qseries::{q_pochhammer, q_pochhammer_inf, q_pochhammer_log, SeriesTol};
use crate::report::run_battery;
use crate::transforms::{forward, roundtrip_residual, TestFunction, TransformKind, TransformSpec};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(name = "qbessel", version, about = "q-Bessel and (-1)-Bessel functions, their algebras, transforms and limits")]
struct Cli {
    /// Output format; defaults to pretty for `eval` and `transform`, json otherwise.
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,
    /// Seed for randomized checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Exact,
    Numeric,
}

/// Named scalar parameters, given as `p/q`, integers or (numeric mode only)
/// decimals.
#[derive(Args, Debug, Default)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function or polynomial at points.
    Eval(EvalArgs),
    /// Check the algebra relations and Casimir of a representation exactly.
    VerifyAlgebra(AlgebraArgs),
    /// Check polynomial eigen-equations exactly.
    VerifyEigen(EigenArgs),
    /// Run limit transitions along their parameter paths.
    VerifyLimits(LimitArgs),
    /// Tabulate a transform or check its round trip.
    Transform(TransformArgs),
    /// Run the full verification battery and print one aggregate JSON report.
    Report,
}

#[derive(Args)]
struct EvalArgs {
    /// bessel-norm, bessel-j, dunkl-kernel, minus1-bessel, cas, q-bessel3,
    /// q-bessel2, jackson2, jackson3, q-pochhammer, little-q-jacobi,
    /// q-laguerre, minus1-jacobi, jacobi, laguerre
    #[arg(long = "fn")]
    function: String,
    #[command(flatten)]
    params: ParamArgs,
    /// Evaluation point; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    x: Vec<String>,
    /// Evenly spaced points `from:to:count`.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    #[arg(long, value_enum, env = "QBESSEL_MODE", default_value = "numeric")]
    mode: Mode,
    /// Series truncation (terms).
    #[arg(long)]
    truncation: Option<usize>,
    /// Relative series tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args)]
struct AlgebraArgs {
    /// little-q-jacobi, minus1-jacobi, q-bessel3, dunkl, q-laguerre, q-bessel2, daha
    #[arg(long)]
    rep: String,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 16)]
    degree: i64,
}

#[derive(Args)]
struct EigenArgs {
    /// little-q-jacobi, q-laguerre, minus1-jacobi
    #[arg(long)]
    family: String,
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, default_value_t = 12)]
    n_max: u32,
}

#[derive(Args)]
struct LimitArgs {
    /// A registered case id, `qshifted`, or `all`.
    #[arg(long, default_value = "all")]
    case: String,
    #[command(flatten)]
    params: ParamArgs,
    /// Override the final-error tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Args)]
struct TransformArgs {
    /// hankel, dunkl or minus1
    #[arg(long)]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: String,
    /// gaussian, narrow-gaussian, odd-gaussian, mixed
    #[arg(long, default_value = "gaussian")]
    function: String,
    /// Spectral points `from:to:count`.
    #[arg(long, allow_hyphen_values = true, default_value = "0:4:9")]
    grid: String,
    /// Check inverse(forward(f)) = f at the grid points instead of tabulating.
    #[arg(long)]
    roundtrip: bool,
    /// Largest accepted round-trip residual.
    #[arg(long, default_value_t = 1e-7)]
    max_residual: f64,
    /// Largest accepted change under grid refinement.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    cutoff: Option<f64>,
    #[arg(long)]
    panels: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
}

impl ParamArgs {
    fn provided(&self) -> Vec<(&'static str, &str)> {
        let all = [
            ("q", &self.q),
            ("a", &self.a),
            ("b", &self.b),
            ("r", &self.r),
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("k", &self.k),
            ("n", &self.n),
            ("nu", &self.nu),
        ];
        all.into_iter().filter_map(|(k, v)| v.as_deref().map(|v| (k, v))).collect()
    }

    fn only(&self, allowed: &[&str], context: &str) -> Result<()> {
        match self.provided().into_iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(Error::Parameter(format!("{context} does not take --{k}"))),
            None => Ok(()),
        }
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.provided()
            .into_iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v)
            .ok_or_else(|| Error::Parameter(format!("missing --{key}")))
    }

    fn rat(&self, key: &str) -> Result<Rational> {
        parse_rational(self.raw(key)?)
    }

    fn real(&self, key: &str) -> Result<f64> {
        parse_real(self.raw(key)?)
    }

    fn rational_map(&self) -> Result<BTreeMap<String, Rational>> {
        self.provided().into_iter().map(|(k, v)| Ok((k.to_string(), parse_rational(v)?))).collect()
    }
}

fn parse_grid(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || Error::Parse(format!("grid `{s}` must be from:to:count"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let (from, to) = (parse_real(parts[0])?, parse_real(parts[1])?);
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    match count {
        0 => Err(bad()),
        1 => Ok(vec![from]),
        _ => Ok((0..count).map(|i| from + (to - from) * i as f64 / (count - 1) as f64).collect()),
    }
}

/// A table with named columns, rendered as JSON, CSV or aligned text.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    meta: Value,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Table {
    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.header.iter().map(|h| h.to_string()).zip(r.iter().cloned()).collect()))
                    .collect();
                let mut doc = self.meta.clone();
                doc["rows"] = Value::Array(rows);
                json_text(&doc)
            }
            OutputFormat::Csv => {
                let mut out = self.header.join(",") + "\n";
                for r in &self.rows {
                    out += &r.iter().map(cell).collect::<Vec<_>>().join(",");
                    out.push('\n');
                }
                out
            }
            OutputFormat::Pretty => {
                let value_cols = &self.rows.first().map(|r| r.len()).unwrap_or(0);
                if self.rows.len() == 1 && *value_cols == 2 {
                    return cell(&self.rows[0][1]) + "\n";
                }
                let mut out = self.header.iter().map(|h| format!("{h:>24}")).collect::<String>() + "\n";
                for r in &self.rows {
                    out += &r.iter().map(|c| format!("{:>24}", cell(c))).collect::<String>();
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn json_text<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output") + "\n"
}

fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or_else(|| Value::String(v.to_string()))
}

/// Output of a command before exit-code mapping.
enum Emit {
    Text(String),
    Check { passed: bool, text: String },
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(Emit::Text(stdout)) => Outcome { code: 0, stdout, stderr: String::new() },
        Ok(Emit::Check { passed, text }) => Outcome { code: if passed { 0 } else { 1 }, stdout: text, stderr: String::new() },
        Err(e @ (Error::Parse(_) | Error::Parameter(_) | Error::UnsupportedMode(_) | Error::Domain(_))) => {
            Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: json_text(&json!({"passed": false, "error": e.to_string()})),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Emit> {
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match &cli.command {
        Command::Eval(a) => eval(a, cli.output.unwrap_or(OutputFormat::Pretty)).map(Emit::Text),
        Command::VerifyAlgebra(a) => verify_algebra(a, seed, report_format(cli.output)?),
        Command::VerifyEigen(a) => verify_eigen(a, report_format(cli.output)?),
        Command::VerifyLimits(a) => verify_limits(a, report_format(cli.output)?),
        Command::Transform(a) => transform(a, cli.output.unwrap_or(OutputFormat::Pretty)),
        Command::Report => {
            let format = report_format(cli.output)?;
            let rep = run_battery(seed)?;
            let text = match format {
                OutputFormat::Pretty => {
                    let mut s: String = rep
                        .checks
                        .iter()
                        .map(|c| format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.id))
                        .collect();
                    s += &format!("{}/{} checks passed\n", rep.summary.passed, rep.summary.total);
                    s
                }
                _ => json_text(&rep),
            };
            Ok(Emit::Check { passed: rep.passed, text })
        }
    }
}

fn report_format(f: Option<OutputFormat>) -> Result<OutputFormat> {
    match f {
        Some(OutputFormat::Csv) => Err(Error::Parameter("csv output is only available for eval and transform tables".into())),
        Some(f) => Ok(f),
        None => Ok(OutputFormat::Json),
    }
}

fn points(a: &EvalArgs) -> Result<Vec<String>> {
    let mut pts = a.x.clone();
    if let Some(g) = &a.grid {
        pts.extend(parse_grid(g)?.into_iter().map(|v| v.to_string()));
    }
    Ok(pts)
}

fn series_tol(a: &EvalArgs) -> SeriesTol {
    let d = SeriesTol::default();
    SeriesTol { rel: a.tolerance.unwrap_or(d.rel), max_terms: a.truncation.unwrap_or(d.max_terms) }
}

fn eval(a: &EvalArgs, format: OutputFormat) -> Result<String> {
    let p = &a.params;
    let name = a.function.as_str();
    let pts = points(a)?;
    let numeric_only = |allowed: &[&str]| -> Result<()> {
        p.only(allowed, name)?;
        if a.mode == Mode::Exact {
            return Err(Error::UnsupportedMode(format!("{name} has no exact mode")));
        }
        if pts.is_empty() {
            return Err(Error::Parameter(format!("{name} needs --x or --grid")));
        }
        Ok(())
    };
    let xs = || pts.iter().map(|s| parse_real(s)).collect::<Result<Vec<f64>>>();
    let real_table = |f: &dyn Fn(f64) -> Result<f64>| -> Result<Vec<Vec<Value>>> {
        xs()?.into_iter().map(|x| Ok(vec![num(x), num(f(x)?)])).collect()
    };
    let meta = json!({"function": name, "mode": a.mode, "params": p.provided().into_iter().collect::<BTreeMap<_, _>>()});
    let table = |header: Vec<&'static str>, rows: Vec<Vec<Value>>| Table { header, rows, meta: meta.clone() }.render(format);
    let tol = series_tol(a);

    match name {
        "bessel-norm" | "minus1-bessel" => {
            numeric_only(&["alpha"])?;
            let alpha = p.real("alpha")?;
            let f = |x: f64| if name == "bessel-norm" { bessel_norm(alpha, x) } else { minus1_bessel(alpha, x) };
            Ok(table(vec!["x", "value"], real_table(&f)?))
        }
        "bessel-j" => {
            numeric_only(&["nu"])?;
            let nu = p.real("nu")?;
            Ok(table(vec!["x", "value"], real_table(&|x| bessel_j(nu, x))?))
        }
        "cas" => {
            numeric_only(&[])?;
            Ok(table(vec!["x", "value"], real_table(&|x| Ok(cas(x)))?))
        }
        "dunkl-kernel" => {
            numeric_only(&["alpha"])?;
            let alpha = p.real("alpha")?;
            let rows = xs()?
                .into_iter()
                .map(|x| dunkl_kernel(alpha, x).map(|v| vec![num(x), num(v.re), num(v.im)]))
                .collect::<Result<Vec<_>>>()?;
            Ok(table(vec!["x", "re", "im"], rows))
        }
        "q-bessel2" => {
            numeric_only(&["a", "q"])?;
            let (al, ql) = (SignedLog::from_f64(p.real("a")?), SignedLog::from_f64(p.real("q")?));
            Ok(table(vec!["x", "value"], real_table(&|x| q_bessel2_log(x, al, ql, tol))?))
        }
        "jackson2" | "jackson3" => {
            numeric_only(&["nu", "q"])?;
            let (nu, q) = (p.real("nu")?, p.real("q")?);
            let kind = if name == "jackson2" { JacksonKind::Second } else { JacksonKind::Third };
            Ok(table(vec!["x", "value"], real_table(&|x| jackson_q_bessel(kind, nu, x, q))?))
        }
        "q-bessel3" => {
            p.only(&["a", "q"], name)?;
            if pts.is_empty() {
                return Err(Error::Parameter(format!("{name} needs --x or --grid")));
            }
            match a.mode {
                Mode::Numeric => {
                    let (al, ql) = (SignedLog::from_f64(p.real("a")?), SignedLog::from_f64(p.real("q")?));
                    Ok(table(vec!["x", "value"], real_table(&|x| q_bessel3_log(x, al, ql, tol))?))
                }
                Mode::Exact => {
                    let (ar, qr) = (p.rat("a")?, p.rat("q")?);
                    let order = a.truncation.unwrap_or(40);
                    let rows = pts
                        .iter()
                        .map(|s| {
                            let x = parse_rational(s)?;
                            let c = q_bessel3_exact(&x, &ar, &qr, order)?;
                            Ok(vec![json!(rational_string(&x)), json!(rational_string(&c.value)), num(c.tail_bound)])
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Ok(table(vec!["x", "value", "tail_bound"], rows))
                }
            }
        }
        "q-pochhammer" => {
            p.only(&["a", "q", "n"], name)?;
            let infinite = p.raw("n")? == "inf";
            let value = match (a.mode, infinite) {
                (Mode::Exact, true) => return Err(Error::UnsupportedMode("(a;q)_oo has no exact rational value".into())),
                (Mode::Exact, false) => {
                    let n = parse_count(p.raw("n")?)?;
                    json!(rational_string(&q_pochhammer(&p.rat("a")?, &p.rat("q")?, n)))
                }
                (Mode::Numeric, inf) => {
                    let (al, ql) = (SignedLog::from_f64(p.real("a")?), SignedLog::from_f64(p.real("q")?));
                    if inf {
                        num(q_pochhammer_inf(al, ql, a.tolerance.unwrap_or(1e-17))?.value)
                    } else {
                        num(q_pochhammer_log(al, ql, parse_count(p.raw("n")?)?))
                    }
                }
            };
            Ok(table(vec!["n", "value"], vec![vec![json!(p.raw("n")?), value]]))
        }
        _ => {
            let family = Family::parse(&name.replace('-', "_"))
                .map_err(|_| Error::Parameter(format!("unknown function {name:?}")))?;
            let n = parse_count(p.raw("n")?)?;
            let keys: BTreeMap<String, Rational> = p.rational_map()?.into_iter().filter(|(k, _)| k != "n").collect();
            let allowed: Vec<&str> = family_params(family).iter().copied().chain(["n"]).collect();
            p.only(&allowed, name)?;
            let poly = build(family, n, &keys)?;
            if pts.is_empty() {
                return Ok(json_text(&poly));
            }
            let rows = match a.mode {
                Mode::Exact => pts
                    .iter()
                    .map(|s| {
                        let x = parse_rational(s)?;
                        Ok(vec![json!(rational_string(&x)), json!(rational_string(&poly.eval(&x)))])
                    })
                    .collect::<Result<Vec<_>>>()?,
                Mode::Numeric => xs()?.into_iter().map(|x| vec![num(x), num(poly.eval_f64(x))]).collect(),
            };
            Ok(table(vec!["x", "value"], rows))
        }
    }
}

fn parse_count(s: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| Error::Parse(format!("`{s}` is not a nonnegative integer")))
}

fn family_params(f: Family) -> &'static [&'static str] {
    match f {
        Family::LittleQJacobi => &["q", "a", "b"],
        Family::QLaguerre => &["q", "a"],
        Family::Minus1Jacobi | Family::Jacobi => &["alpha", "beta"],
        Family::Laguerre => &["alpha"],
    }
}

fn build_rep(name: &str, p: &ParamArgs) -> Result<Representation> {
    let rep = match name {
        "little-q-jacobi" => {
            p.only(&["q", "a", "b", "r"], name)?;
            rep_little_q_jacobi(&p.rat("q")?, &p.rat("a")?, &p.rat("b")?, &p.rat("r")?)?
        }
        "minus1-jacobi" => {
            p.only(&["alpha", "beta"], name)?;
            rep_minus1_jacobi(&p.rat("alpha")?, &p.rat("beta")?)?
        }
        "q-bessel3" | "q-laguerre" | "q-bessel2" => {
            p.only(&["q", "a"], name)?;
            let (q, a) = (p.rat("q")?, p.rat("a")?);
            match name {
                "q-bessel3" => rep_qbessel3(&q, &a)?,
                "q-laguerre" => rep_qlaguerre(&q, &a)?,
                _ => rep_qbessel2(&q, &a)?,
            }
        }
        "dunkl" => {
            p.only(&["alpha"], name)?;
            rep_dunkl(&p.rat("alpha")?)?
        }
        _ => return Err(Error::Parameter(format!("unknown representation {name:?}"))),
    };
    Ok(rep)
}

fn verify_algebra(a: &AlgebraArgs, seed: u64, format: OutputFormat) -> Result<Emit> {
    if !(0..=64).contains(&a.degree) {
        return Err(Error::Parameter("--degree must be in 0..=64".into()));
    }
    if a.rep == "daha" {
        a.params.only(&["k"], "daha")?;
        let rep = daha_check(&a.params.rat("k")?, a.degree);
        let passed = rep.passed();
        let doc = json!({"representation": "daha", "report": rep, "passed": passed});
        return Ok(Emit::Check { passed, text: render_doc(&doc, format) });
    }
    let rep = build_rep(&a.rep, &a.params)?;
    let mut passed = true;
    let mut relations = Vec::new();
    for id in rep.relation_ids() {
        match check_relation(&rep, id, a.degree) {
            Ok(r) => relations.push(serde_json::to_value(&r).expect("serializable")),
            Err(Error::SpanFailure { degree, .. }) => {
                passed = false;
                relations.push(json!({"relation_id": id, "in_span": false, "first_failing_degree": degree}));
            }
            Err(e) => return Err(e),
        }
    }
    let mut casimirs = Vec::new();
    for (i, def) in rep.casimirs.iter().enumerate() {
        let registered = i == 0;
        let expected = rational_string(&def.expected);
        match casimir_value_of(def, a.degree) {
            Ok(v) => {
                let matches = v == def.expected;
                passed &= !registered || matches;
                casimirs.push(json!({"id": def.id, "value": rational_string(&v), "expected": expected, "central": true, "matches": matches, "registered": registered}));
            }
            Err(Error::NotCentral { degree }) => {
                passed &= !registered;
                casimirs.push(json!({"id": def.id, "value": null, "expected": expected, "central": false, "first_failing_degree": degree, "registered": registered}));
            }
            Err(e) => return Err(e),
        }
    }
    let params: BTreeMap<String, String> = rep.params.iter().map(|(k, v)| (k.clone(), rational_string(v))).collect();
    let mut doc = json!({
        "representation": rep.name,
        "params": params,
        "max_degree": a.degree,
        "relations": relations,
        "casimirs": casimirs,
    });
    if rep.name == "q_bessel2" {
        let def = qbessel2_yx_relation(&rep)?;
        doc["literal_form"] = match check_relation_def(&rep, &def, a.degree) {
            Err(Error::SpanFailure { degree, .. }) => {
                json!({"relation_id": def.id, "in_span": false, "first_failing_degree": degree})
            }
            Ok(r) => json!({"relation_id": def.id, "in_span": true, "report": r}),
            Err(e) => return Err(e),
        };
        let tw = intertwining_check(&a.params.rat("q")?, &a.params.rat("a")?, a.degree, seed);
        passed &= tw.holds;
        doc["intertwining"] = serde_json::to_value(&tw).expect("serializable");
    }
    doc["passed"] = json!(passed);
    Ok(Emit::Check { passed, text: render_doc(&doc, format) })
}

fn render_doc(doc: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Pretty => {
            let mut out = String::new();
            pretty_lines(doc, "", &mut out);
            out
        }
        _ => json_text(doc),
    }
}

fn pretty_lines(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                pretty_lines(v, &p, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                pretty_lines(v, &format!("{prefix}[{i}]"), out);
            }
        }
        other => {
            out.push_str(&format!("{prefix}: {}\n", cell(other)));
        }
    }
}

fn verify_eigen(a: &EigenArgs, format: OutputFormat) -> Result<Emit> {
    let family = Family::parse(&a.family.replace('-', "_"))?;
    a.params.only(family_params(family), &a.family)?;
    if a.n_max > 40 {
        return Err(Error::Parameter("--n-max must be at most 40".into()));
    }
    let params = a.params.rational_map()?;
    let reports = (0..=a.n_max).map(|n| eigen_check(&build(family, n, &params)?)).collect::<Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.exact);
    let doc = json!({"family": family.name(), "n_max": a.n_max, "reports": reports, "passed": passed});
    Ok(Emit::Check { passed, text: render_doc(&doc, format) })
}

fn verify_limits(a: &LimitArgs, format: OutputFormat) -> Result<Emit> {
    if a.case == "qshifted" {
        a.params.only(&["alpha", "n"], "qshifted")?;
        let alpha = a.params.real("alpha")?;
        let ns: Vec<u32> = match a.params.raw("n") {
            Ok(s) => vec![parse_count(s)?],
            Err(_) => (0..=8).collect(),
        };
        let path = decade_path(1, 10);
        let reports = ns.into_iter().map(|n| qshifted_limit_check(alpha, n, &path)).collect::<Result<Vec<_>>>()?;
        let passed = reports.iter().all(|r| r.passed);
        let doc = json!({"case_id": "qshifted", "reports": reports, "passed": passed});
        return Ok(Emit::Check { passed, text: render_doc(&doc, format) });
    }
    let overrides = a.params.rational_map()?;
    let ids: Vec<&str> = if a.case == "all" {
        if !overrides.is_empty() {
            return Err(Error::Parameter("parameter overrides need a single --case".into()));
        }
        CASE_IDS.to_vec()
    } else {
        vec![a.case.as_str()]
    };
    let mut reports = Vec::new();
    for id in ids {
        let mut case = build_case(id, &overrides)?;
        if let Some(t) = a.tolerance {
            case.tolerance = t;
        }
        reports.push(run_limit(&case)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let doc = json!({"reports": reports, "passed": passed});
    Ok(Emit::Check { passed, text: render_doc(&doc, format) })
}

fn transform(a: &TransformArgs, format: OutputFormat) -> Result<Emit> {
    let kind = TransformKind::parse(&a.kind)?;
    let func = TestFunction::parse(&a.function)?;
    let mut spec = TransformSpec::new(kind, parse_real(&a.alpha)?);
    if let Some(t) = a.tolerance {
        spec.tolerance = t;
    }
    if let Some(c) = a.cutoff {
        spec.cutoff = c;
    }
    if let Some(p) = a.panels {
        spec.panels = p;
    }
    if let Some(o) = a.order {
        spec.order = o;
    }
    let grid = parse_grid(&a.grid)?;
    let f = move |x: f64| func.eval(x);
    if a.roundtrip {
        let rep = roundtrip_residual(&spec, &f, &grid)?;
        let passed = rep.residual <= a.max_residual;
        let doc = json!({"spec": spec, "function": a.function, "report": rep, "max_residual": a.max_residual, "passed": passed});
        let format = if format == OutputFormat::Csv { OutputFormat::Json } else { format };
        return Ok(Emit::Check { passed, text: render_doc(&doc, format) });
    }
    let values = forward(&spec, &f, &grid)?;
    let rows: Vec<Vec<Value>> = grid
        .iter()
        .zip(&values)
        .map(|(l, v)| match kind {
            TransformKind::Dunkl => vec![num(*l), num(v.re), num(v.im)],
            _ => vec![num(*l), num(v.re)],
        })
        .collect();
    let header = match kind {
        TransformKind::Dunkl => vec!["lambda", "re", "im"],
        _ => vec!["lambda", "value"],
    };
    let meta = json!({"spec": spec, "function": a.function});
    Ok(Emit::Text(Table { header, rows, meta }.render(format)))
}
