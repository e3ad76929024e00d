//! End-to-end runs of the `glasner` binary.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn glasner(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_glasner")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let xi = write(dir.path(), "xi.json", r#"{"d":2,"entries":[[[0,1],[0]],[[0],[0,1]]]}"#);
    let pm = write(dir.path(), "pm.json", r#"{"d":2,"entries":[[[0,1],[0,0,1]],[[0,0,0,1],[0,0,0,0,1]]]}"#);
    let junk = write(dir.path(), "junk.json", "not json");

    let (code, v, _) = glasner(&["check", &xi, "--seed", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["verdicts"][0]["status"], "ViolationFound");
    assert!(v["verdicts"][0]["witness"]["v"].is_array());

    let (code, v, _) = glasner(&["check", &pm, "--seed", "1", "--height", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["clear"], true);
    assert_eq!(v["verdicts"][1]["status"], "CertifiedGenericRank");

    let (code, _, err) = glasner(&["check", &junk, "--seed", "1"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
    let (code, _, _) = glasner(&["check", &pm]);
    assert_eq!(code, 2);
}

#[test]
fn check_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let pm = write(dir.path(), "pm.json", r#"{"d":2,"entries":[[[0,1],[0,0,1]],[[0,0,0,1],[0,0,0,0,1]]]}"#);
    let a = glasner(&["check", &pm, "--seed", "17"]);
    let b = glasner(&["check", &pm, "--seed", "17"]);
    assert_eq!(a.1, b.1);
}

#[test]
fn construct_writes_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let gens = write(dir.path(), "g.json", "[[[1,1],[0,1]],[[1,0],[1,1]]]");
    let out = dir.path().join("a.json");
    let (code, v, _) = glasner(&["construct", &gens, "--seed", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!((v["N"].as_u64(), v["R"].as_u64()), (Some(4), Some(2)));
    assert!(v["degree"].as_u64().unwrap() <= 15);
    // The written matrix is accepted by `check`.
    let (code, _, _) = glasner(&["check", out.to_str().unwrap(), "--seed", "3"]);
    assert_eq!(code, 0);

    let single = write(dir.path(), "s.json", "[[[1,1],[0,1]]]");
    let (code, _, err) = glasner(&["construct", &single, "--seed", "3"]);
    assert_eq!(code, 4);
    assert!(err.contains("irreducib"));
    let (code, v, _) = glasner(&["construct", &single, "--seed", "3", "--force"]);
    assert_eq!(code, 3);
    assert_eq!(v["forced"], true);

    let (code, v, _) = glasner(&["construct", "--fixture", "adjoint-sl2", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!((v["d"].as_u64(), v["N"].as_u64()), (Some(3), Some(6)));
}

#[test]
fn density_spectrum_witness() {
    let dir = tempfile::tempdir().unwrap();
    let x = write(dir.path(), "x.json", r#"{"d":1,"entries":[[[0,1]]]}"#);
    let tenths: String = (0..10).map(|i| format!("{i}/10\n")).collect();
    let y = write(dir.path(), "y.txt", &tenths);
    let (code, v, _) = glasner(&["density", &x, &y, "--epsilon", "0.1", "--mesh", "0.05"]);
    assert_eq!(code, 0);
    assert_eq!(v["found"], 1);
    assert_eq!(v["report"]["dense"], true);

    let half = write(dir.path(), "h.txt", "0\n1/2\n");
    let (code, v, _) = glasner(&["density", &x, &half, "--epsilon", "0.2", "--n-min", "-50", "--n-max", "50"]);
    assert_eq!(code, 3);
    assert!(v["found"].is_null());

    let plane = write(dir.path(), "p.txt", "0.1,0.2\n");
    let (code, _, _) = glasner(&["density", &x, &plane, "--epsilon", "0.1"]);
    assert_eq!(code, 2);

    let thirds = write(dir.path(), "t.txt", "0\n1/2\n1/3\n");
    let (code, v, _) = glasner(&["spectrum", &thirds, "--weight", "1"]);
    assert_eq!(code, 0);
    let counts: Vec<(u64, u64)> = v["spectrum"]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["q"].as_u64().unwrap(), e["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(counts, vec![(2, 2), (3, 2), (6, 2)]);

    let sym = write(dir.path(), "sym.json", r#"{"d":2,"entries":[[[0,1],[0,0,1]],[[0,0,1],[0,1]]]}"#);
    let pts = dir.path().join("w.txt");
    let (code, v, _) = glasner(&["witness", &sym, "--v", "1,1", "--w", "1,-1", "--size", "5", "--out", pts.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verified"], true);
    assert_eq!(v["band"]["lo"], "1/3");
    assert_eq!(std::fs::read_to_string(&pts).unwrap().lines().count(), 5);
    let (code, _, _) = glasner(&["witness", &sym, "--v", "1,0", "--w", "1,0"]);
    assert_eq!(code, 3);
}

#[test]
fn expsum_commands() {
    let (code, v, _) = glasner(&["expsum", "complete", "--coeffs", "0,3", "--q", "10"]);
    assert_eq!(code, 0);
    assert!(v["magnitude"].as_f64().unwrap() < 1e-12);
    let (code, v, _) = glasner(&["expsum", "hua", "--degree", "2", "--delta", "0.1", "--q-max", "200", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["samples"], 199);
    let (code, _, _) = glasner(&["expsum", "hua", "--degree", "2", "--delta", "0.9", "--q-max", "20", "--seed", "4"]);
    assert_eq!(code, 2);
}
