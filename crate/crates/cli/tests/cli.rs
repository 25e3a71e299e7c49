//! End-to-end tests of the `socle` binary: exit codes, JSON schema,
//! worked fixture values, and byte-level determinism.

use std::process::{Command, Output};

use serde_json::Value;

fn socle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

fn stdout_text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

/// The report without its timing line, for determinism comparisons.
fn stable_lines(out: &Output) -> String {
    stdout_text(out)
        .lines()
        .filter(|l| !l.contains("timing_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn milnor_fermat_cubic_statistics() {
    let out = socle(&["milnor", "--form", "z1^3+z2^3+z3^3", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "milnor");
    assert_eq!(v["results"]["dimension"], 8);
    assert_eq!(v["results"]["nil_index"], 3);
    assert_eq!(v["results"]["gorenstein"], true);
    assert_eq!(v["results"]["socle_dimension"], 1);
    assert_eq!(v["results"]["hilbert_function"], serde_json::json!([1, 3, 3, 1]));
}

#[test]
fn verify_paper_all_pass() {
    let out = socle(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let text = stdout_text(&out);
    let criterion_lines: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("criterion "))
        .collect();
    assert_eq!(criterion_lines.len(), 9);
    for line in &criterion_lines {
        assert!(line.contains("PASS"), "unexpected line: {line}");
    }
    assert!(text.trim_end().ends_with("all criteria PASS"));
}

#[test]
fn verify_paper_json_shape() {
    let out = socle(&["verify-paper", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["all_pass"], true);
    let criteria = v["results"]["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 9);
    for (i, c) in criteria.iter().enumerate() {
        assert_eq!(c["index"], i + 1);
        assert_eq!(c["pass"], true);
    }
}

#[test]
fn associated_form_worked_value() {
    let out = socle(&[
        "associated-form",
        "--form",
        "z1^3+z2^3+z3^3+t*z1*z2*z3",
        "--param",
        "t=5",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["degree"], 3);
    let terms = v["results"]["form"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    let coeff_of = |exps: &Value| -> Option<String> {
        terms
            .iter()
            .find(|t| &t["exponents"] == exps)
            .map(|t| t["coeff"].as_str().unwrap().to_string())
    };
    assert_eq!(coeff_of(&serde_json::json!([3, 0, 0])).as_deref(), Some("-5/3"));
    assert_eq!(coeff_of(&serde_json::json!([0, 3, 0])).as_deref(), Some("-5/3"));
    assert_eq!(coeff_of(&serde_json::json!([0, 0, 3])).as_deref(), Some("-5/3"));
    assert_eq!(coeff_of(&serde_json::json!([1, 1, 1])).as_deref(), Some("6"));
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "associated-form",
        "--form",
        "z1^3+z2^3+z3^3+5*z1*z2*z3",
        "--json",
    ];
    let one = socle(&args);
    let two = socle(&args);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stable_lines(&one), stable_lines(&two));
}

#[test]
fn mathematical_rejection_exits_one() {
    let out = socle(&[
        "milnor",
        "--form",
        "z1^3+z2^3+z3^3+t*z1*z2*z3",
        "--param",
        "t=-3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_text(&out).contains("isolated"));
}

#[test]
fn malformed_expression_exits_two() {
    let out = socle(&["milnor", "--form", "z1 +* z2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains("parse error"));
}

#[test]
fn undeclared_identifier_exits_two() {
    let out = socle(&["milnor", "--form", "z1^3 + q*z2^3", "--vars", "z1,z2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_text(&out).contains("unknown identifier"));
}

#[test]
fn missing_required_flag_exits_two() {
    let out = socle(&["milnor"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = socle(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_text(&out).contains("verify-paper"));
}

#[test]
fn inverse_system_verified_on_family() {
    let out = socle(&[
        "inverse-system",
        "--gens",
        "2*x1^3+t*x1*x2^3; t*x1^2*x2^2+2*x2^5",
        "--param",
        "t=1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    let check = &v["results"]["annihilator_check"];
    assert_eq!(check["pass"], true);
    assert_eq!(check["span_dimension"], 15);
    assert_eq!(check["expected_dimension"], 15);
    // deg R = ν = 7, in the two ambient dual variables.
    let top = &v["results"]["inverse_system"]["terms"][0];
    let exps = top["exponents"].as_array().unwrap();
    assert_eq!(exps.len(), 2);
    let degree: u64 = exps.iter().map(|e| e.as_u64().unwrap()).sum();
    assert_eq!(degree, 7);
}

#[test]
fn generalized_inverse_system_from_form() {
    let out = socle(&[
        "inverse-system",
        "--form",
        "z1^3+z2^3+z3^3",
        "--generalized",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["source"], "generalized");
    assert_eq!(v["results"]["annihilator_check"]["pass"], true);
    assert_eq!(v["results"]["annihilator_check"]["span_dimension"], 8);
}

#[test]
fn invariants_of_hesse_cubic() {
    let out = socle(&[
        "invariants",
        "--form",
        "z1^3+z2^3+z3^3+t*z1*z2*z3",
        "--param",
        "t=1",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["catalog"], "ternary_cubic");
    assert_eq!(v["results"]["i4"], "215/1296");
    assert_eq!(v["results"]["i6"], "5291/5832");
    assert_eq!(v["results"]["delta"], "21952/19683");
    assert_eq!(v["results"]["j"], "9938375/37933056");
}

#[test]
fn invariants_of_degenerate_member_have_null_j() {
    let out = socle(&[
        "invariants",
        "--form",
        "z1^3+z2^3+z3^3-3*z1*z2*z3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["delta"], "0");
    assert!(v["results"]["j"].is_null());
}

#[test]
fn invariants_of_binary_form() {
    let out = socle(&["invariants", "--form", "z1^4+z2^4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["catalog"], "binary_form");
    assert_eq!(v["results"]["discriminant"], "4096");
    assert_eq!(v["results"]["vanishes"], false);
}

#[test]
fn invariants_reject_unsupported_shape() {
    let out = socle(&["invariants", "--form", "z1^3 + z1*z2^2 + z3^3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn non_gorenstein_quotient_reported_then_refused() {
    let report = socle(&["quotient", "--gens", "x1^2; x1*x2; x2^2", "--json"]);
    assert_eq!(report.status.code(), Some(0));
    let v = stdout_json(&report);
    assert_eq!(v["results"]["socle_dimension"], 2);
    assert_eq!(v["results"]["gorenstein"], false);

    let refusal = socle(&["nilpoly", "--gens", "x1^2; x1*x2; x2^2"]);
    assert_eq!(refusal.status.code(), Some(1));
    assert!(stderr_text(&refusal).contains("Gorenstein"));
}

#[test]
fn weighted_quotient_accepts_quasihomogeneous_grading() {
    let out = socle(&[
        "quotient",
        "--gens",
        "2*x1^3+3*x1*x2^3; 3*x1^2*x2^2+2*x2^5",
        "--weights",
        "3,2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["dimension"], 15);
    assert_eq!(v["inputs"]["weights"], serde_json::json!([3, 2]));
}

#[test]
fn sweep_reports_per_point_status() {
    let out = socle(&[
        "sweep",
        "--command",
        "milnor",
        "--form",
        "z1^3+z2^3+z3^3+t*z1*z2*z3",
        "--from",
        "-4",
        "--to",
        "-2",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    let points = v["results"]["points"].as_array().unwrap();
    assert_eq!(points.len(), 3);
    assert_eq!(points[0]["t"], -4);
    assert_eq!(points[0]["status"], "ok");
    assert_eq!(points[1]["t"], -3);
    assert_eq!(points[1]["status"], "rejected");
    assert_eq!(points[2]["status"], "ok");
    assert_eq!(points[0]["results"]["dimension"], 8);
}

#[test]
fn sweep_rejects_conflicting_parameter_binding() {
    let out = socle(&[
        "sweep",
        "--command",
        "milnor",
        "--form",
        "z1^3+z2^3+z3^3+t*z1*z2*z3",
        "--param",
        "t=1",
        "--from",
        "0",
        "--to",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = socle(&[
        "milnor",
        "--form",
        "z1^3+z2^3+z3^3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // stdout stays human-readable; the file holds the JSON report.
    assert!(stdout_text(&out).contains("dimension"));
    let contents = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(v["command"], "milnor");
    assert_eq!(v["results"]["dimension"], 8);
}

#[test]
fn json_error_object_on_rejection() {
    let out = socle(&[
        "milnor",
        "--form",
        "z1^3+z2^3+z3^3-3*z1*z2*z3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["error"]["kind"], "mathematical");
}

#[test]
fn nilpoly_components_listed_by_degree() {
    let out = socle(&["nilpoly", "--form", "z1^3+z2^3+z3^3", "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_text(&out));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["dimension"], 8);
    assert_eq!(v["results"]["nil_index"], 3);
    assert_eq!(v["results"]["pi_dimension"], 6);
    let comps = v["results"]["components"].as_array().unwrap();
    let degrees: Vec<u64> = comps.iter().map(|c| c["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![2, 3]);
}
