use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use shellab::cli::run;
use shellab::families::FIXTURE_NAMES;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn shellab(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shellab").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn fixture_text(name: &str) -> String {
    let r = shellab(&["fixture", name], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    r.stdout
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("shellab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn pairs(v: &Value) -> BTreeSet<(String, String)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn mcd_reproduces_the_expected_cord_of_every_fixture() {
    for name in FIXTURE_NAMES {
        let doc: Value = serde_json::from_str(&fixture_text(name)).unwrap();
        let r = shellab(&["mcd"], &fixture_text(name));
        assert_eq!(r.code, 0, "{name}: {}", r.stderr);
        let cord: Value = serde_json::from_str(&r.stdout).unwrap();
        let expected = &doc["expected_cord"];
        assert_eq!(pairs(&cord["covers"]), pairs(&expected["covers"]), "{name}");
        let non_covers: BTreeSet<(String, String)> = cord["moves"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|m| m["cover"] == Value::Bool(false))
            .map(|m| (m["source"].as_str().unwrap().into(), m["target"].as_str().unwrap().into()))
            .collect();
        assert_eq!(non_covers, pairs(&expected["non_cover_moves"]), "{name}");
    }
}

#[test]
fn verdict_commands_exit_with_zero_or_one() {
    let fig2 = fixture_text("fig2");
    assert_eq!(shellab(&["validate"], &fig2).code, 0);
    assert_eq!(shellab(&["polygon-complete"], &fig2).code, 1);
    assert_eq!(shellab(&["inversion-ranked"], &fig2).code, 1);
    let b3 = shellab(&["family", "boolean", "3"], "").stdout;
    assert_eq!(shellab(&["polygon-complete"], &b3).code, 0);
    assert_eq!(shellab(&["inversion-ranked"], &b3).code, 0);
    assert_eq!(shellab(&["polygon-strong"], &b3).code, 0);
    let cl = fixture_text("fig5_cl");
    assert_eq!(shellab(&["validate", "--kind", "cl"], &cl).code, 0);
}

#[test]
fn a_missing_label_is_an_input_error() {
    let mut doc: Value = serde_json::from_str(&fixture_text("fig2")).unwrap();
    doc["labeling"]["labels"].as_object_mut().unwrap().remove("0|z1");
    let r = shellab(&["validate"], &doc.to_string());
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("no label"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn malformed_json_reports_its_path() {
    let r = shellab(&["mcd"], r#"{"poset": {"elements": ["a", 3]}}"#);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("poset.elements"), "{}", r.stderr);
    let r = shellab(&["mcd"], "{");
    assert_eq!(r.code, 2);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(shellab(&["no-such-command"], "").code, 2);
    assert_eq!(shellab(&["family", "boolean", "0"], "").code, 2);
    assert_eq!(shellab(&["fixture", "fig99"], "").code, 2);
    assert_eq!(shellab(&["--format", "dot", "validate"], &fixture_text("fig2")).code, 2);
    assert_eq!(shellab(&["--help"], "").code, 0);
}

#[test]
fn shelling_check_reads_chain_indices() {
    let fig2 = temp_file("fig2.json", &fixture_text("fig2"));
    let fig2 = fig2.to_str().unwrap();
    let mcd: Value = serde_json::from_str(&shellab(&["mcd", fig2], "").stdout).unwrap();
    let names: Vec<&str> = mcd["chains"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["123", "154", "543", "534"]);

    let lex = temp_file("lex.txt", "0 1 3 2\n");
    let r = shellab(&["--format", "json", "shelling-check", lex.to_str().unwrap(), fig2], "");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["shelling"], Value::Bool(true));

    let bad = temp_file("bad.txt", "0 1 1 2");
    assert_eq!(shellab(&["shelling-check", bad.to_str().unwrap(), fig2], "").code, 2);
}

#[test]
fn equivalence_audit_is_deterministic_per_seed() {
    let fig7 = fixture_text("fig7");
    let args = ["--seed", "42", "--format", "json", "equivalence-audit", "--samples", "200"];
    let a = shellab(&args, &fig7);
    let b = shellab(&args, &fig7);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["seed"], 42);

    let r = shellab(&["--exhaustive", "--format", "json", "equivalence-audit"], &fixture_text("fig2"));
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["exhaustive"], Value::Bool(true));
    assert_eq!(v["checked"], 24);
    assert_eq!(v["agree_true"], 1);
}

#[test]
fn family_generators_feed_the_analysis_commands() {
    let count = |doc: &str| -> usize {
        let r = shellab(&["mcd"], doc);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        v["chains"].as_array().unwrap().len()
    };
    assert_eq!(count(&shellab(&["family", "boolean", "4"], "").stdout), 24);
    assert_eq!(count(&shellab(&["family", "partition", "4"], "").stdout), 18);
    let minimal = shellab(&["family", "partition", "4", "--labeling", "minimal:12,34,13,14,23,24"], "");
    assert_eq!(minimal.code, 0, "{}", minimal.stderr);
    assert_eq!(count(&minimal.stdout), 18);
    assert_eq!(shellab(&["polygon-strong"], &minimal.stdout).code, 0);
    let young = shellab(&["family", "young", "3,2,1", "--tableau", "1,4,6/2,5/3"], "");
    assert_eq!(count(&young.stdout), 16);
    assert_eq!(count(&shellab(&["family", "young", "3,2/1"], "").stdout), 5);

    let q = temp_file("chain.json", r#"{"elements": ["a", "b", "c"], "covers": [["a", "b"]]}"#);
    let jp = shellab(&["family", "jp", q.to_str().unwrap(), "--ext", "a,c,b"], "");
    assert_eq!(jp.code, 0, "{}", jp.stderr);
    assert_eq!(count(&jp.stdout), 3);
    assert_eq!(shellab(&["family", "partition", "4", "--labeling", "minimal:12,11"], "").code, 2);
}

#[test]
fn dot_output_is_a_digraph() {
    let r = shellab(&["--format", "dot", "mcd"], &fixture_text("fig2"));
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("digraph"));
    assert_eq!(r.stdout.matches("->").count(), 3);
}

#[test]
fn the_binary_reads_standard_input() {
    let exe = env!("CARGO_BIN_EXE_shellab");
    let fig2 = temp_file("stdin-fig2.json", &fixture_text("fig2"));
    let out = Command::new(exe)
        .arg("polygon-complete")
        .stdin(std::fs::File::open(&fig2).unwrap())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("123 -> 543"));
    let out = Command::new(exe).args(["validate", "/nonexistent/file.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
