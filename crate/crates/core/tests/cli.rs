use std::path::Path;
use std::process::{Command, Output};

use peiffer::catalog::instances::{c4_inversion, corrupted_identity, dual_numbers_augmentation};
use peiffer::field::FieldSpec;
use peiffer::io::{parse_json, pcm_to_file, to_json, PcmFile};

fn peiffer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peiffer")).args(args).output().expect("binary runs")
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "good.json", &to_json(&pcm_to_file(&c4_inversion())));
    assert_eq!(peiffer(&["validate", arg(&good)]).status.code(), Some(0));

    let bad = write(dir.path(), "bad.json", &to_json(&pcm_to_file(&corrupted_identity())));
    let out = peiffer(&["validate", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(b=1, x=2)"));

    let junk = write(dir.path(), "junk.json", "{\"variety\": ");
    assert_eq!(peiffer(&["validate", arg(&junk)]).status.code(), Some(2));
    assert_eq!(peiffer(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn commutator_specs() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "d.json", &to_json(&pcm_to_file(&dual_numbers_augmentation(FieldSpec::Prime(2)))));
    let out = peiffer(&["commutator", arg(&d), "all", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["commutator"]["elements"], serde_json::json!([["0", "1"]]));

    let c4 = write(dir.path(), "c4.json", &to_json(&pcm_to_file(&c4_inversion())));
    let out = peiffer(&["commutator", arg(&c4), "[2]", "all"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["X"]["elements"], serde_json::json!([0, 2]));
    assert_eq!(v["commutator"]["size"], 1);
    assert_eq!(peiffer(&["commutator", arg(&c4), "[9]", "all"]).status.code(), Some(2));
}

#[test]
fn generated_files_round_trip_and_feed_back() {
    let dir = tempfile::tempdir().unwrap();
    let gen = dir.path().join("gen");
    let out = peiffer(&["generate", "--count", "12", "--seed", "5", "--out", arg(&gen)]);
    assert_eq!(out.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&gen).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 12);
    for f in &files {
        let text = std::fs::read_to_string(f).unwrap();
        let parsed: PcmFile = parse_json(&text).unwrap();
        assert_eq!(to_json(&parsed), text);
        assert_eq!(peiffer(&["validate", arg(f)]).status.code(), Some(0));
    }

    // outputs of the constructions are inputs again
    let prod = dir.path().join("prod");
    let out = peiffer(&["product", arg(&files[0]), arg(&files[0]), "--out", arg(&prod)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    for name in ["product.json", "l_X.json", "l_Y.json"] {
        assert_eq!(peiffer(&["validate", arg(&prod.join(name))]).status.code(), Some(0));
    }
    let refl = dir.path().join("refl");
    assert_eq!(peiffer(&["reflect", arg(&prod.join("product.json")), "--out", arg(&refl)]).status.code(), Some(0));
    assert_eq!(peiffer(&["check-crossed", arg(&refl.join("reflection.json"))]).status.code(), Some(0));
    assert_eq!(peiffer(&["validate", arg(&refl.join("eta.json"))]).status.code(), Some(0));
}

#[test]
fn check_crossed_and_coproduct() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.json", &to_json(&pcm_to_file(&c4_inversion())));
    let out = peiffer(&["check-crossed", arg(&c4), "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("(b=1, x=1): 3 vs 1"));
    assert_eq!(peiffer(&["coproduct", arg(&c4), arg(&c4)]).status.code(), Some(1));
}

#[test]
fn theorem_reports_are_deterministic() {
    let args = ["check-theorems", "--count", "30", "--seed", "11"];
    let a = peiffer(&args);
    let b = peiffer(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    for line in String::from_utf8(a.stdout).unwrap().lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert!(v.get("ms").is_none());
    }
}

#[test]
fn injected_corruption_fails_with_a_revalidating_counterexample() {
    let out = peiffer(&["check-theorems", "--inject-corrupt", "--variety", "groups"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let first: serde_json::Value = serde_json::from_str(stdout.lines().next().unwrap()).unwrap();
    assert_eq!(first["check"], "characterization");
    assert_eq!(first["verdict"], "fail");
    assert!(first["witness"].as_str().unwrap().contains("under delta"));

    let dir = tempfile::tempdir().unwrap();
    let cx = write(dir.path(), "cx.json", &to_json(&first["counterexample"]));
    assert_eq!(peiffer(&["validate", arg(&cx)]).status.code(), Some(1));
}

#[test]
fn raised_caps_warn() {
    let out = peiffer(&["generate", "--count", "1", "--max-order", "128"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("may be slow"));
}
