use std::process::Command;

use serde_json::Value;

fn isocx() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_isocx"));
    c.env_remove("ISOCX_JOBS");
    c
}

fn run_json(args: &[&str]) -> (i32, Vec<Value>) {
    let out = isocx().args(args).output().expect("binary runs");
    let records: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap_or_default();
    (out.status.code().unwrap_or(-1), records)
}

#[test]
fn main_suite_profile() {
    let (code, records) = run_json(&["verify", "main", "--p", "2", "--rmax", "3", "--ext", "1"]);
    assert_eq!(code, 0);
    let profiles: Vec<(u64, Value)> = records
        .iter()
        .filter(|r| r["case"] == "closed-point")
        .map(|r| (r["params"]["r"].as_u64().unwrap(), r["computed"].clone()))
        .collect();
    assert_eq!(
        profiles,
        vec![
            (0, serde_json::json!([[0, 1]])),
            (1, serde_json::json!([[1, 3]])),
            (2, serde_json::json!([[2, 2]])),
            (3, serde_json::json!([])),
        ]
    );
    for r in &records {
        for key in ["suite", "params", "expected", "computed", "pass", "millis", "dims"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["millis"], 0);
    }
}

#[test]
fn appendix_suite() {
    let (code, records) = run_json(&["verify", "appendix", "--mmax", "4", "--rmax", "2"]);
    assert_eq!(code, 0);
    let membership: Vec<_> = records.iter().filter(|r| r["case"] == "membership").collect();
    assert_eq!(membership.len(), (1..=16).map(|m| 16 / m).sum::<usize>());
    assert!(membership.iter().all(|r| r["computed"] == true));
}

#[test]
fn configuration_errors_exit_2() {
    for args in [
        &["verify", "main", "--p", "4"][..],
        &["verify", "gamma", "--p", "3", "--trunc", "4"],
        &["verify", "groups", "--rmax", "3", "--torsion", "2"],
        &["verify", "main", "--rmax", "6"],
        &["verify", "main", "--ext", "3"],
        &["verify", "main", "--jobs", "0"],
    ] {
        let out = isocx().args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "no report for {args:?}");
    }
    let out = isocx().args(["verify", "nothing"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_and_out_file() {
    let dir = std::env::temp_dir().join(format!("isocx_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bar.csv");
    let out = isocx()
        .args(["verify", "bar", "--p", "2", "--rmax", "2", "--format", "csv", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("suite,case,params,dims,expected,computed,pass,millis,detail"));
    assert_eq!(rows.count(), 5);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn byte_identical_across_jobs() {
    let args = ["verify", "groups", "--p", "2", "--p", "3", "--rmax", "3"];
    let a = isocx().args(args).output().unwrap();
    let b = isocx().args(args).env("ISOCX_JOBS", "3").output().unwrap();
    let c = isocx().args(args).args(["--jobs", "2"]).env("ISOCX_JOBS", "0").output().unwrap();
    assert!(a.status.success() && b.status.success() && c.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn timings_are_opt_in() {
    let (code, records) = run_json(&["verify", "bar", "--p", "3", "--rmax", "3", "--timings"]);
    assert_eq!(code, 0);
    assert!(records.iter().all(|r| r["millis"].is_u64()));
}
