use std::path::PathBuf;
use std::process::Command;

use ringgenus_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn data(rel: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(rel).display().to_string()
}

fn ringgenus(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ringgenus").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn analyze_matrix_ring_over_f2() {
    let (code, out, _) = ringgenus(&["analyze", &data("rings/M2F2.ring")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("vertices: 14, edges: 7"), "{out}");
    assert!(out.contains("decomposition: 7K2"));
    assert!(out.contains("genus: 0 (clique_formula), planar"));
}

#[test]
fn analyze_is_deterministic_and_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for i in 0..2 {
        let report = dir.path().join(format!("report{i}.json"));
        let dot = dir.path().join(format!("graph{i}.dot"));
        let (code, out, _) = ringgenus(&[
            "analyze",
            &data("rings/M2F2.ring"),
            "--report",
            report.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
            "--case",
            "T21a",
            "--p",
            "2",
        ]);
        assert_eq!(code, EXIT_OK);
        let report = std::fs::read_to_string(report).unwrap();
        let dot = std::fs::read_to_string(dot).unwrap();
        outputs.push((out, report, dot));
    }
    assert_eq!(outputs[0], outputs[1]);
    let (_, report, dot) = &outputs[0];
    let doc: serde_json::Value = serde_json::from_str(report).unwrap();
    assert_eq!(doc["order"], 16);
    assert_eq!(doc["center_size"], 2);
    assert_eq!(doc["vertex_count"], 14);
    assert_eq!(doc["genus"], 0);
    assert_eq!(doc["method"], "clique_formula");
    assert_eq!(doc["classification"], "planar");
    assert_eq!(doc["matched"], true);
    // the per-clique terms add up to the reported genus
    let sum: u64 = doc["genus_terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["genus"].as_u64().unwrap())
        .sum();
    assert_eq!(sum, 0);
    assert_eq!(dot.matches(" -- ").count(), 7);
}

#[test]
fn analyze_against_the_wrong_case_is_a_mismatch() {
    let (code, out, _) = ringgenus(&[
        "analyze",
        &data("rings/M2F2.ring"),
        "--case",
        "T21b",
        "--p",
        "2",
    ]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(
        out.contains("hypothesis fails: |Z| = 2, expected 4"),
        "{out}"
    );
}

#[test]
fn commutative_ring_is_reported_by_name() {
    let (code, _, err) = ringgenus(&["analyze", &data("rings/Z4.ring")]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("CommutativeRing"), "{err}");
}

#[test]
fn validate_reports_axioms() {
    let (code, out, _) = ringgenus(&["validate", &data("rings/row2.ring")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("associativity: ok"));
    assert!(out.contains("unity: none"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ring");
    // g0 g0 = g1 and g1 g0 = g0 on Z2 x Z2: (g0 g0) g0 = g0 but g0 (g0 g0) = 0
    std::fs::write(
        &bad,
        r#"{"name": "bad", "additive": [2, 2], "mult": {"constants": [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]}}"#,
    )
    .unwrap();
    let (code, out, _) = ringgenus(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("associativity: FAILED"), "{out}");
}

#[test]
fn predict_order_p4_at_two() {
    let (code, out, _) = ringgenus(&["predict", "--case", "T21a", "--p", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| l.starts_with("  [")).count(), 3);
    assert!(out.ends_with("genera: {0, 1, 2}\n"));

    let (code, out, _) = ringgenus(&[
        "predict", "--case", "T21a", "--p", "2", "--l", "4,1", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["outcomes"].as_array().unwrap().len(), 1);
    assert_eq!(doc["outcomes"][0]["genus"], 1);
}

#[test]
fn predict_rejects_bad_parameters() {
    let (code, _, err) = ringgenus(&["predict", "--case", "T25a", "--p", "2", "--q", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("HypothesisViolated"));
    let (code, _, err) = ringgenus(&["predict", "--case", "T99", "--p", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("T99"));
    let (code, _, err) = ringgenus(&["predict", "--p", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--case"), "{err}");
}

#[test]
fn oracle_and_bound_on_k5() {
    let (code, out, _) = ringgenus(&["oracle", &data("graphs/k5.graph")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("genus: 1 (toroidal)"));
    let (code, out, _) = ringgenus(&["bound", &data("graphs/k5.graph")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("genus >= 1"));
    let (code, _, err) = ringgenus(&["oracle", &data("graphs/k5.graph"), "--budget", "10"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("BudgetExceeded"));
}

#[test]
fn catalog_verify_and_export() {
    let (code, out, _) = ringgenus(&["catalog", "verify"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.ends_with("9 matched, 0 mismatched\n"));

    let (code, out, _) = ringgenus(&["catalog", "verify", "T2(F2)xZ2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["rows"][0]["decomposition"]["terms"][0]["size"], 4);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t2z3.ring");
    let (code, _, _) = ringgenus(&["catalog", "export", "T2(F2)xZ3", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = ringgenus(&[
        "analyze",
        path.to_str().unwrap(),
        "--case",
        "T24",
        "--p",
        "2",
        "--q",
        "3",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("decomposition: 3K6"));
    assert!(out.contains("genus: 3"));

    let (code, _, _) = ringgenus(&["catalog", "verify", "nope"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn search_order_twelve() {
    let (code, out, _) = ringgenus(&["search", "--order", "12", "--center-size", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("T23a p=2 q=3, T23b p=2 q=3"));
    assert!(out.ends_with("no witness within budget\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ringgenus");
    let status = Command::new(bin)
        .args(["catalog", "verify"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    let status = Command::new(bin).args(["analyze"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    let status = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
}
