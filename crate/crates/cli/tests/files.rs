//! The binary against space and endomorphism files on disk.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

fn ctrace(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ctrace"))
        .args(args)
        .env("CTRACE_COLOR", "0")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn triangle_boundary_is_a_circle() {
    let dir = TempDir::new().unwrap();
    let file = write(
        &dir,
        "triangle.json",
        r#"{"complex": {"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["b", "c"], ["c", "a"]]}}"#,
    );
    let (code, out, _) = ctrace(&["cohomology", "--file", s(&file), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 1]));
    assert_eq!(v["euler_characteristic"], 0);
}

#[test]
fn profile_and_nested_builtin_files() {
    let dir = TempDir::new().unwrap();
    let profile = write(
        &dir,
        "s3.json",
        r#"{"profile": {"0": ["1"], "3": ["x_3"]}, "name": "S^3"}"#,
    );
    let (code, out, _) = ctrace(&["sigma", "--file", s(&profile), "-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("K_6"));

    let torus = write(
        &dir,
        "torus.json",
        r#"{"builtin": "product", "params": [{"builtin": "sphere", "params": [1]}, {"builtin": "sphere", "params": [1]}]}"#,
    );
    let (code, out, _) = ctrace(&["cohomology", "--file", s(&torus), "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn bad_files_exit_with_the_documented_codes() {
    let dir = TempDir::new().unwrap();
    let garbage = write(&dir, "garbage.json", "{not json");
    assert_eq!(ctrace(&["cohomology", "--file", s(&garbage)]).0, 2);

    let unknown_vertex = write(
        &dir,
        "bad.json",
        r#"{"complex": {"vertices": ["a", "b"], "facets": [["a", "z"]]}}"#,
    );
    let (code, _, err) = ctrace(&["cohomology", "--file", s(&unknown_vertex)]);
    assert_eq!(code, 3);
    assert!(err.starts_with("ctrace: "));

    let both = write(
        &dir,
        "both.json",
        r#"{"builtin": "point", "profile": {"0": ["1"]}}"#,
    );
    assert_eq!(ctrace(&["cohomology", "--file", s(&both)]).0, 2);
}

#[test]
fn endomorphism_files() {
    let dir = TempDir::new().unwrap();
    let identity = write(&dir, "id.json", r#"{"degree_blocks": {}}"#);
    let (code, out, _) = ctrace(&[
        "endo",
        "--builtin",
        "sphere",
        "3",
        "-n",
        "3",
        "--endo",
        s(&identity),
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["identity"], true);

    let doubling = write(&dir, "double.json", r#"{"degree_blocks": {"3": [[2]]}}"#);
    let (code, out, _) = ctrace(&[
        "endo",
        "--builtin",
        "sphere",
        "3",
        "-n",
        "3",
        "--endo",
        s(&doubling),
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["identity"], false);
    let block0 = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["total_degree"] == 0)
        .unwrap();
    assert_eq!(block0["matrix"], serde_json::json!([["2"]]));

    let wrong = write(
        &dir,
        "wrong.json",
        r#"{"degree_blocks": {"3": [[1, 0], [0, 1]]}}"#,
    );
    let (code, _, _) = ctrace(&[
        "endo",
        "--builtin",
        "sphere",
        "3",
        "-n",
        "3",
        "--endo",
        s(&wrong),
    ]);
    assert_eq!(code, 3);
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("report.json");
    let args = ["pi", "--builtin", "cp", "2", "-n", "3", "--json"];
    let (code, stdout, _) = ctrace(&args);
    assert_eq!(code, 0);
    let mut with_output = args.to_vec();
    with_output.extend(["--output", s(&target)]);
    let (code, empty, _) = ctrace(&with_output);
    assert_eq!(code, 0);
    assert!(empty.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), stdout);
}

#[test]
fn unwritable_output_is_an_io_error() {
    let (code, _, _) = ctrace(&[
        "pi",
        "--builtin",
        "point",
        "--output",
        "/nonexistent/dir/out.txt",
    ]);
    assert_eq!(code, 1);
}
