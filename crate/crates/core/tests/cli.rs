use std::path::PathBuf;
use std::process::{Command, Output};

use dzpairs::catalog::catalog_get;
use dzpairs::cli::{pair_text, verify_file, WEIGHT_BOUND_ENV};
use dzpairs::polycore::RatPoly;
use dzpairs::seriesgen::series_d;
use serde_json::Value;

fn dzpairs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dzpairs"))
        .args(args)
        .env_remove(WEIGHT_BOUND_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dzpairs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn construct_then_verify_roundtrip() {
    let o = dzpairs(&["--format", "json", "construct", "--series", "D", "--s", "1", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let line: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    let poly = |key: &str| {
        let cs: Vec<&str> = line[key].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
        cs.join(",")
    };
    let path = scratch("d11.txt", &format!("{}\n{}\n", poly("P"), poly("Q")));
    let v = dzpairs(&["--format", "json", "verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    let report: Value = serde_json::from_str(stdout(&v).trim()).unwrap();
    let d = series_d(1, 1).unwrap();
    let lib = verify_file(&path, Some(&d.passport)).unwrap();
    assert_eq!(lib, d.report().unwrap());
    assert_eq!(report["degR_observed"], 1);
    assert_eq!(report["minimal"], true);
    assert_eq!(line["passport"], "3,3|2,2,1,1");
}

#[test]
fn catalog_file_is_minimal() {
    let k = catalog_get("K").unwrap().dz_pair().unwrap();
    let path = scratch("k.txt", &pair_text(&k.p, &k.q));
    let rep = verify_file(&path, None).unwrap();
    assert!(rep.minimal && rep.passes());
    assert_eq!(rep.deg_r_observed, 1);
    let o = dzpairs(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn non_coprime_pair_is_rejected() {
    let x3 = RatPoly::from_ints(&[0, 0, 0, 1]);
    let path = scratch("x3.txt", &pair_text(&x3, &x3));
    let o = dzpairs(&["verify", path.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    assert!(!verify_file(&path, None).map(|r| r.passes()).unwrap_or(false));
}

#[test]
fn relaxed_entry_reports_nine_over_eight() {
    let o = dzpairs(&["--format", "json", "verify", "--catalog", "relaxed_cubeS"]);
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["degR_observed"], 9);
    assert_eq!(report["degR_required"], 8);
    assert_eq!(report["minimal"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(dzpairs(&["hall", "--count", "2"]).status.code(), Some(0));
    assert_eq!(dzpairs(&["catalog", "--verify"]).status.code(), Some(0));
    assert_eq!(dzpairs(&["catalog", "nonesuch"]).status.code(), Some(2));
    assert_eq!(dzpairs(&["construct", "--series", "Z"]).status.code(), Some(2));
    assert_eq!(dzpairs(&["enumerate", "--passport", "3,3|2,2"]).status.code(), Some(2));
    assert_eq!(dzpairs(&["bogus"]).status.code(), Some(2));
    assert_eq!(dzpairs(&["--help"]).status.code(), Some(0));
}

#[test]
fn hall_json_lines() {
    let o = dzpairs(&["--format", "json", "hall", "--count", "3"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], serde_json::json!({"a": "22", "b": "100", "gap": "648"}));
}

#[test]
fn weight_bound_from_environment() {
    let run = |bound: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_dzpairs"));
        c.args(["--format", "json", "enumerate", "--passport", "9^5|5^9"]);
        match bound {
            Some(b) => c.env(WEIGHT_BOUND_ENV, b),
            None => c.env_remove(WEIGHT_BOUND_ENV),
        };
        c.output().unwrap()
    };
    let low = run(None);
    assert_ne!(low.status.code(), Some(0));
    let ok = run(Some("45"));
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&ok).trim()).unwrap();
    assert_eq!(v["count"], 11);
    assert_eq!(run(Some("lots")).status.code(), Some(2));
}

#[test]
fn parallel_sweep_matches_serial() {
    let args = |jobs: &'static str| {
        vec!["--format", "json", "--jobs", jobs, "construct", "--series", "F", "--k", "2-5", "--l", "1", "--m", "2-3"]
    };
    let serial = dzpairs(&args("1"));
    let parallel = dzpairs(&args("4"));
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(stdout(&serial), stdout(&parallel));
    assert_eq!(stdout(&serial).lines().count(), 8);
}
