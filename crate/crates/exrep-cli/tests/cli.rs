//! Binary-level tests: exit-code contract, report determinism, output
//! formats and fixture handling.

use std::io::Write;
use std::process::{Command, Output};

fn exrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn classify_the_example_end_to_end() {
    let out = exrep(&[
        "classify",
        "--p",
        "59",
        "--k",
        "16",
        "--fixture",
        concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/p59.json"),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("a_p ≡ 0 (mod p): yes"));
    assert!(text.contains("p ≡ 3 (mod 8)"));
    assert!(text.contains("every locally induced lift has finite image up to twist"));
}

#[test]
fn classify_valuation_obstruction() {
    let out = exrep(&["classify", "--p", "7", "--k", "12"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v2(p+1) = 3 exceeds 2"));
}

#[test]
fn exit_code_contract() {
    // Usage errors: p = 2 (explicitly guarded), non-prime p, odd weight,
    // unknown group.
    assert_eq!(exrep(&["classify", "--p", "2", "--k", "12"]).status.code(), Some(2));
    assert_eq!(exrep(&["classify", "--p", "9", "--k", "12"]).status.code(), Some(2));
    assert_eq!(exrep(&["classify", "--p", "7", "--k", "13"]).status.code(), Some(2));
    assert_eq!(exrep(&["chars", "e8"]).status.code(), Some(2));
    assert_eq!(exrep(&["chars", "cyclic", "--d", "3"]).status.code(), Some(2));
    // Missing required argument goes through clap, also 2.
    assert_eq!(exrep(&["classify", "--p", "7"]).status.code(), Some(2));

    // Precision / resource errors.
    assert_eq!(
        exrep(&["classify", "--p", "59", "--k", "16", "--precision-override", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(exrep(&["scan", "--p-max", "400"]).status.code(), Some(3));

    // Fixture / data errors.
    assert_eq!(
        exrep(&["classify", "--p", "59", "--k", "16", "--require-theorem2"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        exrep(&["classify", "--p", "59", "--k", "16", "--fixture", "/nonexistent.json"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn p2_message_is_explicit() {
    let out = exrep(&["classify", "--p", "2", "--k", "12"]);
    assert!(stderr(&out).contains("p = 2"));
    assert!(stderr(&out).contains("a_2(f) = 0"));
}

#[test]
fn fixture_for_wrong_prime_is_a_data_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"p": 59, "group": "S4", "entries": []}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = exrep(&["classify", "--p", "23", "--k", "12", "--fixture", path]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("fixture is for p = 59"));
}

#[test]
fn malformed_fixture_is_a_data_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"p": 59, "group": "S4", "entries": [
            {{"label": "L^Q8", "degree": 3, "class_number": 1, "source": "bogus"}}
        ]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = exrep(&["classify", "--p", "59", "--k", "16", "--fixture", path]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("lattice"));
}

#[test]
fn inconclusive_verdict_from_failing_fixture() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"p": 59, "group": "S4", "entries": [
            {{"label": "L^S3", "degree": 4, "class_number": 59, "source": "synthetic"}}
        ]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = exrep(&["classify", "--p", "59", "--k", "16", "--fixture", path]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("inconclusive (hypothesis fails)"));
}

#[test]
fn scan_reports_are_byte_identical_across_parallelism() {
    let base = exrep(&["scan", "--p-max", "60", "--parallelism", "1", "--format", "json"]);
    assert!(base.status.success());
    for workers in ["2", "8"] {
        let other = exrep(&[
            "scan", "--p-max", "60", "--parallelism", workers, "--format", "json",
        ]);
        assert!(other.status.success());
        assert_eq!(base.stdout, other.stdout, "parallelism {}", workers);
    }
}

#[test]
fn scan_json_contains_the_example_hit() {
    let out = exrep(&["scan", "--p-max", "60", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let hits = doc["scan"]["hits"].as_array().unwrap();
    assert!(hits
        .iter()
        .any(|h| h["p"] == 59 && h["k"] == 16 && h["d"] == 4));
}

#[test]
fn scan_below_eleven_is_empty() {
    let out = exrep(&["scan", "--p-max", "10", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["scan"]["hits"].as_array().unwrap().len(), 0);
}

#[test]
fn chars_s4_table_shape() {
    let out = exrep(&["chars", "S4", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["chars"]["irreducibles"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let mut degrees: Vec<i64> = rows.iter().map(|r| r["degree"].as_i64().unwrap()).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 2, 3, 3]);
}

#[test]
fn chars_d8_has_one_two_dimensional_row() {
    let out = exrep(&["chars", "dihedral", "--d", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("chi_box"));
    assert!(text.contains("D8 (order 8)"));
}

#[test]
fn json_reports_parse_and_echo_the_command() {
    let out = exrep(&["classify", "--p", "23", "--k", "12", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["command"], "classify --p 23 --k 12 --lbound 100");
    assert_eq!(doc["classify"]["locus"]["v2_p_plus_1"], 3);
    // Timings stay out of the document unless asked for.
    assert!(doc.get("timings_ms").is_none());
    let timed = exrep(&["classify", "--p", "23", "--k", "12", "--format", "json", "--timings"]);
    let doc: serde_json::Value = serde_json::from_slice(&timed.stdout).unwrap();
    assert!(doc.get("timings_ms").is_some());
}

#[test]
fn verify_example_passes_with_the_shipped_fixture() {
    let out = exrep(&["verify-example", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["verify_example"]["passed"], true);
    assert_eq!(doc["verify_example"]["stages"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_example_mismatch_exits_five() {
    // A fixture that parses and validates but fails the nicely-exceptional
    // stage: the theorem2 stage must report FAIL and the exit code is 5.
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"p": 59, "group": "S4", "entries": [
            {{"label": "L^S3", "degree": 4, "class_number": 59, "source": "synthetic"}}
        ]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = exrep(&["verify-example", "--fixture", path]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).contains("[FAIL] theorem2"));
}
