use std::path::Path;
use std::process::{Command, Output};

use agl_cli::presentation::{CURVE_4_9_11_14, CURVE_5_7_9_13};

fn agl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agl")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_text_and_json() {
    let out = agl(&["analyze", "3,7,8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("class: two_almost_gorenstein"));

    let out = agl(&["analyze", "4,9,11,14", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["class"], "two_almost_gorenstein");
    assert_eq!(v["type"], 3);
    assert_eq!(v["conductor"]["gens"], serde_json::json!([8, 9, 11, 14]));
    assert_eq!(v["kmodr"]["free"], false);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["analyze", "6,8,10,11", "--json"][..],
        &["ulrich", "6,8,10,11", "--json"],
        &["toric", "5,7,9,13", "--json"],
        &["corpus", "--count", "40", "--json"],
        &["examples", "--json"],
    ] {
        let a = agl(args);
        let b = agl(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(agl(&["analyze", "4,6"]).status.code(), Some(2));
    assert_eq!(agl(&["analyze", "3,x"]).status.code(), Some(2));
    assert_eq!(agl(&["idealization", "3,4,5", "--q", "2"]).status.code(), Some(2));
    assert_eq!(agl(&["check-presentation", "--bundled", "nope"]).status.code(), Some(2));
}

#[test]
fn ulrich_scans() {
    let v = json(&agl(&["ulrich", "6,8,10,11", "--json"]));
    let gens: Vec<_> = v["certificates"].as_array().unwrap().iter().map(|c| c["gens"].clone()).collect();
    assert_eq!(gens, [serde_json::json!([6, 11]), serde_json::json!([6, 8, 10]), serde_json::json!([8, 11])]);

    let out = agl(&["ulrich", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bundled_presentations_pass() {
    for name in ["curve_5_7_9_13", "curve_4_9_11_14"] {
        let out = agl(&["check-presentation", "--bundled", name, "--json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = json(&out);
        assert_eq!(v["passed"], true);
        assert_eq!(v["shape"]["verdict"]["kind"], "contained_and_equal_to_bound");
    }
}

// The entry b11 of the second block, Y, becomes X.
fn perturbed_4_9_11_14() -> String {
    let target = r#""Y", "W", "X^4""#;
    assert!(CURVE_4_9_11_14.contains(target));
    CURVE_4_9_11_14.replacen(target, r#""X", "W", "X^4""#, 1)
}

#[test]
fn perturbed_manifest_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, perturbed_4_9_11_14()).unwrap();
    let out = agl(&["check-presentation", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["shape"]["verdict"]["kind"], "not_contained");

    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(agl(&["check-presentation", path.to_str().unwrap()]).status.code(), Some(2));
}

fn write_fixtures(dir: &Path, curve_4_9_11_14: &str) {
    std::fs::write(dir.join("curve_5_7_9_13.json"), CURVE_5_7_9_13).unwrap();
    std::fs::write(dir.join("curve_4_9_11_14.json"), curve_4_9_11_14).unwrap();
}

#[test]
fn examples_table() {
    let out = agl(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!stdout(&out).contains("FAIL"));

    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path(), CURVE_4_9_11_14);
    assert_eq!(agl(&["examples", "--fixtures", dir.path().to_str().unwrap()]).status.code(), Some(0));

    write_fixtures(dir.path(), &perturbed_4_9_11_14());
    let out = agl(&["examples", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL  4-9-11-14.presentation"));
}
