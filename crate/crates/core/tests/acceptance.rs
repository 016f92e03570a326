//! One line per acceptance criterion. Criteria 1 and 3-10 are read from the
//! aggregate `report` document; criterion 2 recomputes the Casimir values
//! against closed forms; criterion 11 compares two `report` runs byte for byte.

use std::process::{Command, ExitCode};

use qbessel::numerics::{rat, Rational};
use qbessel::opalgebra::{casimir_value, rep_dunkl, rep_little_q_jacobi, rep_minus1_jacobi, rep_qbessel3, rep_qlaguerre};
use serde_json::Value;

const DESCRIPTIONS: [&str; 11] = [
    "exact algebra relations in span to degree 16, >= 3 tuples per representation",
    "Casimir values equal closed forms exactly",
    "exact eigenvalue identities for n <= 12",
    "DAHA relations to degree 16 for k in {1/2, 3/4, 5/2}",
    "q-difference series residuals vanish through order 28",
    "special values within 1e-12 on a 20-point grid",
    "even/odd decomposition within 1e-10",
    "little q-Jacobi orthogonality within 1e-10 + certified tail",
    "limit battery and q-shifted factorial limits",
    "transform round trips and Gaussian self-reciprocity",
    "report output is byte-identical across runs",
];

fn report_run() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_qbessel")).arg("report").output().expect("run qbessel report");
    (out.status.code(), out.stdout)
}

fn casimir_closed_forms() -> Result<usize, String> {
    let mut count = 0;
    let mut expect = |got: Rational, want: Rational, what: String| {
        count += 1;
        if got == want {
            Ok(())
        } else {
            Err(format!("{what}: got {got}, want {want}"))
        }
    };
    for (q, a, b, r) in [
        (rat(1, 2), rat(1, 3), rat(3, 4), rat(1, 2)),
        (rat(1, 3), rat(2, 5), rat(5, 2), rat(1, 1)),
        (rat(-2, 7), rat(1, 2), rat(9, 8), rat(3, 4)),
    ] {
        let lqj = rep_little_q_jacobi(&q, &a, &b, &r).map_err(|e| e.to_string())?;
        expect(casimir_value(&lqj, 16).map_err(|e| e.to_string())?, -(rat(1, 1) / &b), format!("little q-Jacobi b={b}"))?;
        let qb3 = rep_qbessel3(&q, &a).map_err(|e| e.to_string())?;
        expect(casimir_value(&qb3, 16).map_err(|e| e.to_string())?, -a.clone(), format!("q-Bessel-3 a={a}"))?;
        let ql = rep_qlaguerre(&q, &a).map_err(|e| e.to_string())?;
        expect(casimir_value(&ql, 16).map_err(|e| e.to_string())?, -(&a * &q * &q), format!("q-Laguerre q={q} a={a}"))?;
    }
    for (al, be) in [(rat(1, 2), rat(3, 2)), (rat(-1, 3), rat(2, 5)), (rat(2, 1), rat(0, 1))] {
        let m1 = rep_minus1_jacobi(&al, &be).map_err(|e| e.to_string())?;
        expect(casimir_value(&m1, 16).map_err(|e| e.to_string())?, rat(1, 1), format!("(-1)-Jacobi alpha={al}"))?;
        let d = rep_dunkl(&al).map_err(|e| e.to_string())?;
        expect(casimir_value(&d, 16).map_err(|e| e.to_string())?, rat(1, 1), format!("Dunkl alpha={al}"))?;
    }
    Ok(count)
}

fn main() -> ExitCode {
    let (code1, first) = report_run();
    let (code2, second) = report_run();
    let doc: Value = serde_json::from_slice(&first).expect("report is JSON");
    let checks = doc["checks"].as_array().expect("checks array");

    let mut all_ok = true;
    for c in 1..=11u8 {
        let (ok, detail) = match c {
            2 => match casimir_closed_forms() {
                Ok(n) => (true, format!("{n} exact equalities")),
                Err(e) => (false, e),
            },
            11 => (
                first == second && code1 == code2,
                format!("{} bytes, exit codes {code1:?}/{code2:?}", first.len()),
            ),
            _ => {
                let mine: Vec<&Value> = checks.iter().filter(|r| r["criterion"] == c).collect();
                let failed: Vec<&str> =
                    mine.iter().filter(|r| r["passed"] != true).map(|r| r["id"].as_str().unwrap_or("?")).collect();
                let ok = !mine.is_empty() && failed.is_empty();
                let detail = if failed.is_empty() {
                    format!("{}/{} checks", mine.len(), mine.len())
                } else {
                    format!("{}/{} checks; failed: {}", mine.len() - failed.len(), mine.len(), failed.join(", "))
                };
                (ok, detail)
            }
        };
        all_ok &= ok;
        println!("criterion {c:>2} {} {} ({detail})", if ok { "PASS" } else { "FAIL" }, DESCRIPTIONS[c as usize - 1]);
    }
    let supplementary_failed: Vec<&str> = checks
        .iter()
        .filter(|r| r["criterion"].is_null() && r["passed"] != true)
        .map(|r| r["id"].as_str().unwrap_or("?"))
        .collect();
    if !supplementary_failed.is_empty() {
        println!("supplementary checks failed: {}", supplementary_failed.join(", "));
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
