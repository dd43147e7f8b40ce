//! End-to-end runs of the `induced` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn induced(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_induced")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_a_readable_set() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c16.txt");
    let out = induced(&["gen", "circle", "--n", "16", "--out", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&file).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(lines.next(), Some("dim 2"));
    assert_eq!(lines.count(), 16);
    let stdout = induced(&["gen", "circle", "--n", "16"]);
    assert_eq!(String::from_utf8(stdout.stdout).unwrap(), text);
}

#[test]
fn gen_random_needs_a_seed() {
    assert_eq!(induced(&["gen", "random", "--n", "10"]).status.code(), Some(2));
    let a = induced(&["gen", "random", "--n", "10", "--seed", "5"]);
    let b = induced(&["gen", "random", "--n", "10", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn pierce_reports_one_holds_key() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c16.txt");
    induced(&["gen", "circle", "--n", "16", "--out", path(&file)]);
    let out = induced(&["pierce", "--in", path(&file), "--family", "rect", "--variant", "strong"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).matches("\"holds\"").count(), 1);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "pierce");
    assert_eq!(v["holds"], true);
    assert_eq!(v["n"], 16);
    assert_eq!(v["coefficient"]["exact"], "1/16");
    let index = v["point"]["index"].as_u64().expect("strong points are members") as usize;
    assert!(index < 16);
    assert!(v["observed"].as_u64().unwrap() >= 1);
}

#[test]
fn pierce_weak_reports_a_rational_point() {
    let out = induced(&["pierce", "--family", "disk", "--variant", "weak", "--n", "12", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["holds"], true);
    assert_eq!(v["point"]["exact"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_passes_on_random_sets() {
    let out =
        induced(&["verify", "--family", "slab", "--variant", "strong", "--trials", "100", "--n", "24", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["trials"], 100);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 100);
    assert_eq!(v["results"][99]["seed"], 7 + 99);
}

#[test]
fn verify_reports_replay_data_on_failure() {
    let out = induced(&[
        "verify",
        "--family",
        "slab",
        "--variant",
        "strong",
        "--trials",
        "3",
        "--n",
        "24",
        "--seed",
        "7",
        "--slack=-20",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["holds"], false);
    assert_eq!(v["failed"], 3);
    let text = v.to_string();
    assert!(text.contains("replay"), "{text}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        induced(&["pierce", "--family", "bogus", "--variant", "strong", "--n", "5", "--seed", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(induced(&["pierce", "--family", "rect", "--variant", "strong", "--n", "5"]).status.code(), Some(2));
    assert_eq!(
        induced(&["depth", "--family", "rect", "--point", "1/0,2", "--n", "5", "--seed", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(induced(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(induced(&["--help"]).status.code(), Some(0));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "dim 2\n1 2\n3\n").unwrap();
    let out = induced(&["pierce", "--in", path(&file), "--family", "rect", "--variant", "strong"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn depth_engines_agree() {
    for family in ["rect", "quadrant", "slab", "skyline", "disk", "downtri"] {
        let out = induced(&["depth", "--family", family, "--point", "1/3,-5/2", "--n", "30", "--seed", "11"]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v = json(&out);
        if !v["fast"].is_null() {
            assert_eq!(v["brute"], v["fast"], "{family}");
        }
    }
}

#[test]
fn second_interval_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let (points, subset) = (dir.path().join("line.txt"), dir.path().join("pairs.txt"));
    induced(&["gen", "line", "--n", "6", "--d", "1", "--out", path(&points)]);
    std::fs::write(&subset, "pairs 3\n0 5\n1 3\n2 4\n").unwrap();
    let out = induced(&["second", "--family", "interval", "--in", path(&points), "--subset", path(&subset)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["m"], 3);
    assert_eq!(v["max"], 3);
    assert_eq!(v["depths"], serde_json::json!([1, 2, 3, 3, 2, 1]));
    std::fs::write(&subset, "pairs 1\n0 9\n").unwrap();
    let bad = induced(&["second", "--family", "interval", "--in", path(&points), "--subset", path(&subset)]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn second_rect_csv() {
    let out = induced(&["second", "--family", "rect", "--n", "8", "--m", "10", "--seed", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("gx,gy,depth"));
    assert_eq!(lines.count(), 64);
}

#[test]
fn second_interval_upper() {
    let out = induced(&["second", "--family", "interval", "--upper", "--n", "20", "--m", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["bound_holds"], true);
}

#[test]
fn delaunay_graphs_are_planar() {
    for family in ["skyline", "downtri", "disk"] {
        let out = induced(&["delaunay", "--family", family, "--n", "30", "--seed", "4"]);
        assert_eq!(out.status.code(), Some(0), "{family}");
        let v = json(&out);
        assert_eq!(v["planar"], true, "{family}");
        assert_eq!(v["euler_bound"], true, "{family}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "--family", "rect", "--variant", "weak", "--trials", "20", "--n", "16", "--seed", "99"];
    assert_eq!(induced(&args).stdout, induced(&args).stdout);
    let only = ["selftest", "--seed", "3", "--only", "6"];
    let (a, b) = (induced(&only), induced(&only));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
