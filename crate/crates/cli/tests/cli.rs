//! End-to-end tests of the `salg` binary: pinned text output, JSON shape,
//! exit codes, and text/JSON agreement.

use std::process::{Command, Output};

use serde_json::Value;

fn salg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_salg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = salg(args);
    assert!(
        out.status.success(),
        "expected success, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid JSON output")
}

#[test]
fn check_text_output_is_pinned() {
    let text = stdout_of(&["check", "--ring", "Z/12", "--coeffs", "1,2,4"]);
    let expected = "ring: Z/12\n\
                    coeffs: [1, 2, 4]\n\
                    d_f = 2\n\
                    ann2 = (6)\n\
                    annD = (6)\n\
                    intersection = (6)\n\
                    verdict: non-trivial invariants exist\n";
    assert_eq!(text, expected);
    let text = stdout_of(&["check", "--ring", "Z/3", "--coeffs", "0,0"]);
    assert!(text.contains("verdict: only invariants are A"));
    // n = 1: the pair product is empty, so d_f = 1 and the condition holds.
    let text = stdout_of(&["check", "--ring", "Z/2", "--coeffs", "0"]);
    assert!(text.contains("d_f = 1"));
    assert!(text.contains("verdict: only invariants are A"));
}

#[test]
fn check_json_matches_text_values() {
    let v = json_of(&[
        "check", "--ring", "Z/12", "--coeffs", "1,2,4", "--format", "json",
    ]);
    assert_eq!(v["ring"], "Z/12");
    assert_eq!(v["coeffs"], serde_json::json!([[1], [2], [4]]));
    assert_eq!(v["d_f"], serde_json::json!([2]));
    assert_eq!(v["ann2"], serde_json::json!([6]));
    assert_eq!(v["annD"], serde_json::json!([6]));
    assert_eq!(v["intersection"], serde_json::json!([6]));
    assert_eq!(v["verdict"], "non-trivial invariants exist");
}

#[test]
fn check_multi_factor_ring() {
    let text = stdout_of(&["check", "--ring", "Z/4xZ/3", "--coeffs", "2,1"]);
    assert!(text.contains("ring: Z/4 x Z/3"));
    // in the Z/3 factor 2 is a unit, so the intersection is zero there,
    // but the Z/4 factor keeps (2): verdict is non-trivial.
    assert!(text.contains("verdict: non-trivial invariants exist"));
}

#[test]
fn witness_text_output_is_pinned() {
    let text = stdout_of(&["witness", "--ring", "Z/2", "--coeffs", "0,0,0"]);
    assert!(text.contains("seed: 1"));
    assert!(text.contains("(1,2) -> t3^1"));
    assert!(text.contains("(1,3) -> t2^1*t3^1"));
    assert!(text.contains("(2,3) -> 0"));
    assert!(text.contains("y = t2^1*t3^2"));
    assert!(text.contains("invariant=true"));
    assert!(text.contains("in_base=false"));

    let text = stdout_of(&["witness", "--ring", "Z/4", "--coeffs", "2,1"]);
    assert!(text.contains("y = 2*t2^1"));

    let text = stdout_of(&["witness", "--ring", "Z/5", "--coeffs", "0,4"]);
    assert!(text.contains("condition holds — no witness exists"));
}

#[test]
fn witness_json_round_trips_the_element() {
    let v = json_of(&[
        "witness", "--ring", "Z/2", "--coeffs", "0,0,0", "--format", "json",
    ]);
    assert_eq!(v["verdict"], "non-trivial invariants exist");
    let y = &v["witness"]["y"];
    // y = τ_2 τ_3², a single term with exponents (0, 1, 2) and coefficient 1
    assert_eq!(y.as_array().map(Vec::len), Some(1));
    assert_eq!(y[0]["exps"], serde_json::json!([0, 1, 2]));
    assert_eq!(y[0]["coeff"], serde_json::json!([1]));
    assert_eq!(v["witness"]["multiplied_by_last_root"], true);
    assert_eq!(v["witness"]["verification"]["invariant"], true);
    assert_eq!(v["witness"]["verification"]["in_base"], false);
    assert_eq!(v["witness"]["verification"]["two_x_in_base"], true);
    assert_eq!(v["witness"]["verification"]["d_f_x_in_base"], true);
    // trail: three steps, last product empty (zero)
    let trail = v["witness"]["trail"].as_array().unwrap();
    assert_eq!(trail.len(), 3);
    assert_eq!(trail[0]["pair"], serde_json::json!([1, 2]));
    assert_eq!(trail[2]["product"], serde_json::json!([]));

    let v = json_of(&[
        "witness", "--ring", "Z/5", "--coeffs", "0,4", "--format", "json",
    ]);
    assert_eq!(v["verdict"], "only invariants are A");
    assert!(v["witness"].is_null());
}

#[test]
fn invariants_text_output_is_pinned() {
    let text = stdout_of(&["invariants", "--ring", "Z/2", "--coeffs", "0,0"]);
    assert!(text.contains("factor Z/2: rank 2"));
    assert!(text.contains("\n  1\n"));
    assert!(text.contains("\n  t2^1\n"));
    let text = stdout_of(&["invariants", "--ring", "Z/3", "--coeffs", "0,0"]);
    assert!(text.contains("factor Z/3: rank 1"));
    let text = stdout_of(&["invariants", "--ring", "Z/4", "--coeffs", "2,1"]);
    assert!(text.contains("factor Z/4: rank 2"));
    assert!(text.contains("\n  2*t2^1\n"));
}

#[test]
fn invariants_json_agrees_with_text() {
    let v = json_of(&[
        "invariants",
        "--ring",
        "Z/4",
        "--coeffs",
        "2,1",
        "--format",
        "json",
    ]);
    assert_eq!(v["rank"], serde_json::json!([2]));
    let rows = v["basis"][0].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    // row 0: the constant 1 → exps (0,0), coeff 1
    assert_eq!(rows[0][0]["exps"], serde_json::json!([0, 0]));
    assert_eq!(rows[0][0]["coeff"], serde_json::json!([1]));
    // row 1: 2*t2^1 → exps (0,1), coeff 2
    assert_eq!(rows[1][0]["exps"], serde_json::json!([0, 1]));
    assert_eq!(rows[1][0]["coeff"], serde_json::json!([2]));
}

#[test]
fn selftest_reports_zero_mismatches() {
    let text = stdout_of(&["selftest", "--moduli", "2..6", "--degrees", "2"]);
    assert!(text.contains("total: instances=90, mismatches=0"));
    let text = stdout_of(&["selftest", "--moduli", "2..4", "--degrees", "3"]);
    assert!(text.contains("modulus 2, degree 3: instances=8"));
    assert!(text.contains("total: instances=99, mismatches=0"));
    // degree 1: D_f = 1, every instance holds
    let text = stdout_of(&["selftest", "--moduli", "2", "--degrees", "1"]);
    assert!(text.contains("condition holds=2"));
    assert!(text.contains("mismatches=0"));
}

#[test]
fn selftest_json_shape() {
    let v = json_of(&[
        "selftest",
        "--moduli",
        "2,3",
        "--degrees",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(v["total_mismatches"], 0);
    assert_eq!(v["total_instances"], 13);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert_eq!(results[0]["modulus"], 2);
    assert_eq!(results[0]["instances"], 4);
}

#[test]
fn exit_codes_are_pinned() {
    // 2: malformed ring
    let out = salg(&["check", "--ring", "Z/0", "--coeffs", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
    // 2: malformed coefficients
    let out = salg(&["check", "--ring", "Z/4", "--coeffs", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    // 2: unsupported group
    let out = salg(&["check", "--ring", "Z/4", "--coeffs", "1,2", "--group", "A3"]);
    assert_eq!(out.status.code(), Some(2));
    // accepted group spellings
    for g in ["Sn", "S2", "S_2"] {
        let out = salg(&["check", "--ring", "Z/4", "--coeffs", "1,2", "--group", g]);
        assert_eq!(out.status.code(), Some(0), "group {g}");
    }
    // 3: size cap on invariants
    let out = salg(&["invariants", "--ring", "Z/2", "--coeffs", "0,0,0,0,0,0,0"]);
    assert_eq!(out.status.code(), Some(3));
    // 3: selftest instance cap
    let out = salg(&["selftest", "--moduli", "1000000", "--degrees", "3"]);
    assert_eq!(out.status.code(), Some(3));
    // 2: bad roots
    let out = salg(&[
        "check", "--ring", "Z/6", "--coeffs", "3,2", "--roots", "1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // 0: verified roots
    let out = salg(&[
        "check", "--ring", "Z/6", "--coeffs", "3,2", "--roots", "5,4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("roots: verified"));
}

#[test]
fn size_cap_is_configurable() {
    // a lowered cap rejects degree 4...
    let out = salg(&[
        "invariants",
        "--ring",
        "Z/2",
        "--coeffs",
        "0,0,0,0",
        "--max-degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // ...which the default cap accepts
    let out = salg(&["invariants", "--ring", "Z/2", "--coeffs", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
}
