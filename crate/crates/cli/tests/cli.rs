use std::process::{Command, Output};

use parry_cli::report::AnalysisReport;
use serde_json::Value;

fn parry(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parry"))
        .args(args)
        .env("PARRY_WORKERS", "4")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn generate_fibonacci() {
    let out = parry(&["generate", "--digits", "1,1", "--len", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "010010100\n");
}

#[test]
fn verify_fibonacci_shows_psi() {
    let out = parry(&["verify", "--digits", "1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["psi"]["images"][0], "01010");
    assert_eq!(r["psi"]["images"][1], "010");
}

#[test]
fn invalid_digits_exit_2() {
    let out = parry(&["verify", "--digits", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Parry condition"));
    assert_eq!(parry(&["generate", "--digits", "1,x", "--len", "3"]).status.code(), Some(2));
}

#[test]
fn analyze_non_confluent_tail_is_zero() {
    let out = parry(&["analyze", "--digits", "3,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["classification"]["kind"], "NonConfluent");
    assert_eq!(r["closed_forms"], Value::Null);
    let p = r["p"].as_array().unwrap();
    assert!(p.len() > 100);
    assert!(p[p.len() / 2..].iter().all(|x| x == 0));
}

#[test]
fn analyze_empty_profile() {
    let r = json(&parry(&["analyze", "--digits", "1,1", "--nmax", "0"]));
    assert_eq!(r["c"], serde_json::json!([1]));
    assert_eq!(r["p"], serde_json::json!([1]));
}

#[test]
fn analyze_json_key_order() {
    let out = parry(&["analyze", "--digits", "2,2", "--nmax", "20"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("  \""))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(keys, ["digits", "classification", "horizon", "c", "delta_c", "p", "closed_forms", "verdicts", "timings"]);
}

#[test]
fn analyze_csv_fibonacci() {
    let out = parry(&["analyze", "--digits", "1,1", "--nmax", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 4);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row[0], n.to_string());
        assert_eq!(row[1], (n + 1).to_string());
    }
}

#[test]
fn report_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = parry(&["analyze", "--digits", "2,2,1", "--nmax", "60", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read_to_string(&path).unwrap();
    let parsed: AnalysisReport = serde_json::from_str(&first).unwrap();
    assert_eq!(parsed.to_json(), first);
    let second = parry(&["analyze", "--digits", "2,2,1", "--nmax", "60"]);
    assert_eq!(String::from_utf8(second.stdout).unwrap(), first);
}

#[test]
fn branch_absent_and_present() {
    let out = parry(&["branch", "--digits", "2,2", "--center", "0", "--len", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = parry(&["branch", "--digits", "3,2", "--center", "eps", "--len", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&parry(&["branch", "--digits", "2,1", "--center", "eps", "--len", "10", "--psi"]));
    assert_eq!(r["exists"], true);
    let f = r["factor"].as_str().unwrap();
    assert!(f.len() >= 10 && f.chars().eq(f.chars().rev()));
    assert_eq!(r["psi"]["images_palindromic"], true);
}

#[test]
fn defect_and_expand() {
    let r = json(&parry(&["defect", "--digits", "2,2", "--len", "5000"]));
    assert_eq!(r["full"], true);
    let r = json(&parry(&["expand", "--beta", "1.618033988749895"]));
    assert_eq!(r["digits"], serde_json::json!([1, 1]));
    assert_eq!(r["termination"], "finite");
    assert_eq!(parry(&["expand", "--beta", "1.0"]).status.code(), Some(2));
}

#[test]
fn small_sweep_passes() {
    let out = parry(&["sweep", "--m-max", "3", "--t-max", "2", "--prefix-len", "20000", "--nmax", "150"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let r = json(&out);
    assert_eq!(r["cases"].as_array().unwrap().len(), 6);
}
