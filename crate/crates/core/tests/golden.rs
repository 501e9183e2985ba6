//! Machine reports of the shipped fixtures are reproducible byte for byte
//! and match the committed golden files. Set `BLESS=1` to rewrite them.

use std::path::{Path, PathBuf};
use std::process::Command;

use supertwist::cli::parse_machine;

/// `(fixture, extra flags, golden name, expected exit status)`.
const CASES: &[(&str, &[&str], &str, i32)] = &[
    ("abelian_even", &[], "abelian_even", 0),
    ("odd_abelian", &[], "odd_abelian", 0),
    ("h_psi", &[], "h_psi", 0),
    ("gl11", &[], "gl11", 0),
    ("gl11_cartan", &[], "gl11_cartan", 0),
    ("direct_rmatrix", &[], "direct_rmatrix", 0),
    ("gl11_cybe_negative", &[], "gl11_cybe_negative", 1),
    ("broken_jacobi", &[], "broken_jacobi", 1),
    ("broken_counit", &[], "broken_counit", 1),
    ("broken_counit", &["--allow-invalid-twist"], "broken_counit_override", 1),
];

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn verify(fixture: &Path, extra: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .arg("verify")
        .arg(fixture)
        .args(["--report", "machine", "--no-timing"])
        .args(extra)
        .output()
        .expect("binary runs");
    assert!(out.stderr.is_empty(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn machine_reports_match_golden_files() {
    let bless = std::env::var_os("BLESS").is_some();
    for (fixture, extra, golden, expected_status) in CASES {
        let path = root().join("fixtures").join(format!("{fixture}.toml"));
        let (first, status) = verify(&path, extra);
        let (second, status2) = verify(&path, extra);
        assert_eq!(first, second, "{golden}: two runs differ");
        assert_eq!((status, status2), (*expected_status, *expected_status), "{golden}: exit status");

        let report = parse_machine(&first).unwrap();
        assert_eq!(report.exit_code(), status, "{golden}: exit status disagrees with the verdicts");

        let golden_path = root().join("tests/golden").join(format!("{golden}.jsonl"));
        if bless {
            std::fs::write(&golden_path, &first).unwrap();
        }
        let expected = std::fs::read_to_string(&golden_path).unwrap();
        assert_eq!(first, expected, "{golden}: report differs from {}", golden_path.display());
    }
}

#[test]
fn every_fixture_has_a_golden_case() {
    let mut shipped: Vec<_> = std::fs::read_dir(root().join("fixtures"))
        .unwrap()
        .map(|e| e.unwrap().path().file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    shipped.sort();
    let mut covered: Vec<_> = CASES.iter().map(|c| c.0.to_string()).collect();
    covered.sort();
    covered.dedup();
    assert_eq!(shipped, covered);
}

#[test]
fn timing_is_present_unless_disabled() {
    let path = root().join("fixtures/odd_abelian.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(["verify", path.to_str().unwrap(), "--report", "machine", "--check", "algebra"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let report = parse_machine(&text).unwrap();
    assert!(report.records.iter().all(|r| r.wall_us.is_some()));
    assert_eq!(report.without_timing().records.len(), 3);
}

#[test]
fn input_errors_exit_with_status_two() {
    let missing = root().join("fixtures/does_not_exist.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist")).arg("verify").arg(&missing).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does_not_exist.toml"));

    let path = root().join("fixtures/odd_abelian.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(["verify", path.to_str().unwrap(), "--check", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn human_report_prints_counterexamples() {
    let path = root().join("fixtures/broken_jacobi.toml");
    let out = Command::new(env!("CARGO_BIN_EXE_supertwist"))
        .args(["verify", path.to_str().unwrap(), "--no-timing"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("counterexample: super-jacobi at (E12, E12, E21)"), "{text}");
    assert!(text.trim_end().ends_with("FAILED"));
}
