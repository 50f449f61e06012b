use std::io::Write;
use std::process::{Command, Output};

use kzero::cli::{self, JobSpec, ReportJson};

fn kzero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kzero"))
        .args(args)
        .output()
        .expect("run kzero")
}

fn spec_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

const HIRZEBRUCH_F1: &str = r#"{
  "mode": "ruled",
  "base": {"kind": "curve", "genus": "0"},
  "parameters": {"deg_e": "-1", "deg_q": "-1"}
}"#;

#[test]
fn ruled_json_report() {
    let spec = spec_file(HIRZEBRUCH_F1);
    let out = kzero(&["run", "--spec", spec.path().to_str().unwrap(), "--json"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: ReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.schema, 1);
    let t = report.intersection_table.unwrap();
    let vals: Vec<String> = [t.fiber_fiber, t.fiber_h, t.h_fiber, t.h_h]
        .into_iter()
        .map(|x| x.0.to_string())
        .collect();
    assert_eq!(vals, ["0", "1", "1", "-1"]);
    assert_eq!(report.e_invariant.unwrap().0, 1.into());
    assert_eq!(report.hilbert_ranks.len(), 33);
    assert_eq!(report.hilbert_rank_check, Some(true));

    // integers are emitted as strings
    let raw: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(raw["e_invariant"], serde_json::json!("1"));
    assert_eq!(raw["gram_ns"], serde_json::json!([["0", "1"], ["1", "-1"]]));
    assert_eq!(raw["radical_basis"], serde_json::json!([["0", "1", "0"]]));
}

#[test]
fn input_echo_round_trips() {
    for json in [
        HIRZEBRUCH_F1,
        r#"{"mode":"point","parameters":{"relation":[1,-3,3,-1]},"series_order":5}"#,
        r#"{"mode":"pnbundle","base":{"kind":"curve","genus":"2"},
            "parameters":{"n":"2","koszul":[["1","0"],["3","1"],["3","2"],["1","1"]]}}"#,
    ] {
        let job = JobSpec::from_json(json).unwrap();
        let report = cli::run(&job).unwrap().to_json();
        let echoed = serde_json::to_string(&report.input).unwrap();
        assert_eq!(JobSpec::from_json(&echoed).unwrap(), job);
    }
}

#[test]
fn point_relation_presentation() {
    let out = kzero(&["run", "--mode", "point", "--relation", "1,-3,3,-1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("K₀ ≅ Z[T]/((1−T)³), free abelian rank 3"),
        "{text}"
    );
}

#[test]
fn flags_and_json_merge() {
    // the document's deg_e wins over the flag, genus comes from the flag
    let spec = spec_file(r#"{"mode":"ruled","parameters":{"deg_e":"-3"}}"#);
    let out = kzero(&[
        "run",
        "--spec",
        spec.path().to_str().unwrap(),
        "--json",
        "--genus",
        "2",
        "--deg-e",
        "5",
        "--deg-q",
        "-3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: ReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.e_invariant.unwrap().0, 3.into());
    assert_eq!(report.input.base.unwrap().genus.unwrap().0, 2.into());
}

#[test]
fn validation_and_parse_errors_exit_1() {
    let out = kzero(&[
        "run",
        "--mode",
        "pnbundle",
        "--genus",
        "1",
        "--n",
        "1",
        "--koszul",
        "1:0,5:0,1:0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("validation error") && err.contains("binomial(2, 1)"),
        "{err}"
    );

    let bad = spec_file("{ not json");
    let out = kzero(&["run", "--spec", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("parse error"));

    let out = kzero(&["run", "--mode", "ruled", "--deg-e", "0", "--deg-q", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let out = kzero(&["verify", "--grid", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"), "{text}");

    let out = kzero(&["verify", "--grid", "-1,-1"]);
    assert_eq!(out.status.code(), Some(0));
}
