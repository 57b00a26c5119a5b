//! Acceptance tests for the command-line surface: golden-file comparisons,
//! JSON round-trips, byte determinism, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

use eulerbasis::{
    bernoulli_poly_order, expand_theorem1, run_grid, GridBounds, IdentityId, IdentityReport,
    Polynomial, Rational,
};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerbasis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

fn poly_from_json_coeffs(value: &serde_json::Value) -> Polynomial {
    let coeffs = value
        .as_array()
        .expect("coeffs is an array")
        .iter()
        .map(|c| c.as_str().expect("rational string").parse::<Rational>().unwrap())
        .collect();
    Polynomial::from_coeffs(coeffs)
}

#[test]
fn criterion_11_golden_files() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["poly", "--family", "euler", "--n", "2", "--order", "1"],
            "poly_euler_n2_r1.plain.txt",
        ),
        (
            &["poly", "--family", "euler", "--n", "3", "--order", "0"],
            "poly_euler_n3_r0.plain.txt",
        ),
        (
            &["poly", "--family", "bernoulli", "--n", "2", "--order", "1"],
            "poly_bernoulli_n2_s1.plain.txt",
        ),
        (
            &["poly", "--family", "euler", "--n", "3", "--format", "latex"],
            "poly_euler_n3_r1.latex.txt",
        ),
        (
            &["poly", "--family", "bernoulli", "--n", "4", "--order", "2", "--format", "json"],
            "poly_bernoulli_n4_s2.json.txt",
        ),
        (
            &["expand", "--poly", "x", "--order", "1", "--format", "csv"],
            "expand_x_r1.csv.txt",
        ),
        (
            &["expand", "--poly", "x^2", "--order", "1"],
            "expand_x2_r1.plain.txt",
        ),
        (
            &["expand", "--poly", "5", "--order", "3"],
            "expand_const_r3.plain.txt",
        ),
        (
            &["expand", "--poly", "x^2", "--order", "1", "--format", "json"],
            "expand_x2_r1.json.txt",
        ),
        (
            &["table", "--family", "euler-number", "--n-max", "3", "--order-max", "1", "--format", "csv"],
            "table_euler_number_n3_r1.csv.txt",
        ),
        (
            &["table", "--family", "bernoulli-number", "--n-max", "2", "--format", "csv"],
            "table_bernoulli_number_n2.csv.txt",
        ),
        (
            &["table", "--family", "euler", "--n-max", "0", "--order-max", "5", "--format", "csv"],
            "table_euler_n0_r5.csv.txt",
        ),
        (
            &["verify", "--identity", "eq20", "--n-max", "3", "--m-max", "1"],
            "verify_eq20_n3_m1.plain.txt",
        ),
        (
            &["verify", "--identity", "cor2", "--n-max", "3", "--r-max", "2", "--format", "csv"],
            "verify_cor2_n3_r2.csv.txt",
        ),
        (
            &["verify", "--identity", "thm6-printed", "--n-max", "4", "--m-max", "2", "--r-max", "1"],
            "verify_thm6printed_n4_m2_r1.plain.txt",
        ),
        (
            &["verify", "--identity", "thm4", "--identity", "thm5", "--n-max", "4", "--r-max", "2", "--format", "latex"],
            "verify_thm4_thm5_n4_r2.latex.txt",
        ),
    ];
    for (args, file) in cases {
        let output = run(args);
        assert!(output.status.success(), "{args:?} failed: {output:?}");
        assert_eq!(stdout(&output), golden(file), "golden mismatch for {args:?}");
    }
    println!("[PASS] criterion 11a: {} golden-file comparisons", cases.len());
}

#[test]
fn criterion_11_json_round_trip() {
    // poly document reconstructs the exact in-memory polynomial
    let output = run(&[
        "poly", "--family", "bernoulli", "--n", "4", "--order", "2", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(doc["schema"], "eulerbasis.polynomial.v1");
    assert_eq!(poly_from_json_coeffs(&doc["coeffs"]), bernoulli_poly_order(4, 2));

    // expansion document reconstructs the exact expansion
    let output = run(&["expand", "--poly", "x^2 - x + 1/6", "--order", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(doc["schema"], "eulerbasis.expansion.v1");
    let expected = expand_theorem1(&bernoulli_poly_order(2, 1), 2);
    let coeffs: Vec<Rational> = doc["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(coeffs, expected.coeffs());
    assert_eq!(doc["order"], 2);

    // report list deserializes into the exact in-memory reports
    let output = run(&[
        "verify", "--identity", "cor3", "--n-max", "3", "--s-max", "2", "--r-max", "1",
        "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(doc["schema"], "eulerbasis.report-list.v1");
    assert_eq!(doc["ok"], true);
    let reports: Vec<IdentityReport> = serde_json::from_value(doc["reports"].clone()).unwrap();
    let expected = run_grid(
        &[IdentityId::Cor3],
        &GridBounds {
            n_max: 3,
            s_max: 2,
            r_max: 1,
            ..GridBounds::default()
        },
    );
    assert_eq!(reports, expected);
    println!("[PASS] criterion 11b: JSON output re-parses to the in-memory results");
}

#[test]
fn criterion_11_byte_determinism() {
    let invocations: &[&[&str]] = &[
        &["poly", "--family", "euler", "--n", "7", "--order", "3", "--format", "json"],
        &["expand", "--poly", "x^5 - 1/3*x + 2", "--order", "4", "--format", "csv"],
        &["verify", "--identity", "thm6-printed", "--identity", "thm6-corrected",
          "--n-max", "5", "--r-max", "2", "--format", "json"],
        &["table", "--family", "bernoulli", "--n-max", "4", "--order-max", "2", "--format", "latex"],
    ];
    for args in invocations {
        let first = run(args);
        let second = run(args);
        assert_eq!(first.stdout, second.stdout, "nondeterministic: {args:?}");
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "nondeterministic exit: {args:?}"
        );
    }
    println!("[PASS] criterion 11c: identical invocations are byte-identical");
}

#[test]
fn criterion_11_exit_codes() {
    // 0: success / all expected instances pass (printed-mode failures reported
    // but excluded from the exit decision)
    assert_eq!(
        run(&["verify", "--identity", "cor2", "--n-max", "6", "--r-max", "3"])
            .status
            .code(),
        Some(0)
    );
    let printed = run(&[
        "verify", "--identity", "thm6-printed", "--n-max", "5", "--m-max", "2", "--r-max", "1",
    ]);
    assert_eq!(printed.status.code(), Some(0));
    assert!(stdout(&printed).contains("FAIL"), "erratum still reported");

    // 2: usage errors
    assert_eq!(
        run(&["poly", "--family", "gauss", "--n", "2"]).status.code(),
        Some(2),
        "unknown family"
    );
    assert_eq!(
        run(&["verify", "--identity", "thm7"]).status.code(),
        Some(2),
        "unknown identity"
    );
    assert_eq!(
        run(&["poly", "--family", "euler", "--n", "2", "--format", "yaml"])
            .status
            .code(),
        Some(2),
        "unknown format"
    );
    assert_eq!(run(&["verify"]).status.code(), Some(2), "missing identity");

    // 2: polynomial parse errors, with a position in the message
    let bad = run(&["expand", "--poly", "x +* 2", "--order", "1"]);
    assert_eq!(bad.status.code(), Some(2));
    let message = String::from_utf8(bad.stderr).unwrap();
    assert!(message.contains("position 3"), "stderr: {message}");
    assert_eq!(
        run(&["expand", "--poly", "1/0", "--order", "1"]).status.code(),
        Some(2),
        "zero-denominator literal"
    );
    println!("[PASS] criterion 11d: exit-code contract (0 pass, 2 usage/parse)");
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let output = run(&[
        "table", "--family", "euler-number", "--n-max", "3", "--order-max", "1",
        "--format", "csv", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(output.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        golden("table_euler_number_n3_r1.csv.txt")
    );
}

#[test]
fn expand_matches_library_for_round_trip_inputs() {
    // CSV coefficients re-parse to the exact library expansion
    let text = "7/3*x^4 - x + 2";
    let output = run(&["expand", "--poly", text, "--order", "3", "--format", "csv"]);
    let coeffs: Vec<Rational> = stdout(&output)
        .trim_end()
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    let expected = expand_theorem1(&eulerbasis::parse_polynomial(text).unwrap(), 3);
    assert_eq!(coeffs, expected.coeffs());
}
