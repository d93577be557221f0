use std::fs;
use std::process::Command;

fn papr_lab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_papr-lab"))
}

#[test]
fn codes_show_prints_parameters() {
    let out = papr_lab().args(["codes", "show", "golay:24"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n: 24"));
    assert!(text.contains("k: 12"));
    assert!(text.contains("d_min: 8"));
}

#[test]
fn bad_spec_fails_with_diagnostic() {
    let out = papr_lab().args(["codes", "show", "hamming:m=99"]).output().unwrap();
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn missing_input_file_fails() {
    let dir = tempfile::tempdir().unwrap();
    let out = papr_lab()
        .args(["run", "--frames", "10", "--input"])
        .arg(dir.path().join("nope.txt"))
        .arg("--out-dir")
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error"), "{err}");
}

#[test]
fn run_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = papr_lab()
        .args([
            "run", "--frames", "400", "--seed", "3", "--code", "hamming:m=4", "--code", "rm:r=1,m=4",
            "--ccdf-level", "0.05", "--format", "csv,json",
        ])
        .arg("--out-dir")
        .arg(dir.path())
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    for name in ["ccdf_none.csv", "ccdf_hamming_m_4.csv", "ccdf_rm_r_1_m_4.csv", "summary.json"] {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let csv = fs::read_to_string(dir.path().join("ccdf_none.csv")).unwrap();
    assert_eq!(csv.lines().next(), Some("threshold_db,ccdf_empirical,ccdf_theoretical"));
}
