use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn splitcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcheck"))
        .args(args)
        .env_remove("SPLITCHECK_FORMAT")
        .env_remove("SPLITCHECK_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = splitcheck(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn adem_reduces() {
    let o = splitcheck(&["adem", "Sq2 Sq2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Sq3 Sq1\n");
}

#[test]
fn act_on_thom_class() {
    assert_eq!(stdout(&splitcheck(&["act", "Sq2 Sq1", "x1^-1 x2^-1"])), "x1 + x2\n");
    assert_eq!(stdout(&splitcheck(&["act", "Sq1", "s1"])), "s1^2\n");
}

#[test]
fn printed_output_parses_back() {
    let first = stdout(&splitcheck(&["act", "Sq4 Sq2", "x1^-1 x2^-1 x3^-1"]));
    let again = stdout(&splitcheck(&["act", "1", first.trim(), "--n", "3"]));
    assert_eq!(first, again);
}

#[test]
fn parse_error_is_usage() {
    let o = splitcheck(&["adem", "Sq2 +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 5"));
}

#[test]
fn unknown_flag_is_usage() {
    assert_eq!(splitcheck(&["adem", "--bogus", "Sq1"]).status.code(), Some(2));
}

#[test]
fn degree_cap_breach() {
    assert_eq!(splitcheck(&["summand", "--n", "2", "--max-degree", "100"]).status.code(), Some(3));
    assert_eq!(
        splitcheck(&["summand", "--n", "2", "--max-degree", "10", "--degree-cap", "5"]).status.code(),
        Some(3)
    );
    assert_eq!(splitcheck(&["summand", "--n", "5", "--max-degree", "3"]).status.code(), Some(3));
}

#[test]
fn relations_json_envelope() {
    let v = json(&["relations", "--max-degree", "6"]);
    assert_eq!(v["command"], "relations");
    assert_eq!(v["params"]["max_degree"], 6);
    assert!(v["tool_version"].is_string());
    let rels = v["result"]["relations"].as_array().unwrap();
    assert_eq!(rels.len(), 6);
    assert_eq!(rels[1], serde_json::json!({"degree": 3, "terms": [[3, 0], [1, 1]]}));
    assert_eq!(v["result"]["published_table"]["pass"], true);
}

#[test]
fn summand_csv_columns() {
    let o = splitcheck(&["summand", "--n", "2", "--twist", "-1", "--min-degree", "-2", "--max-degree", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "degree,dim\n-2,1\n-1,1\n0,1\n1,2\n");
}

#[test]
fn checks_pass() {
    for args in [
        &["mto-check", "--max-degree", "10"][..],
        &["steinberg", "--n", "3"],
        &["loop", "--n", "2", "--max-degree", "12"],
    ] {
        let o = splitcheck(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn verify_all_capped() {
    let o = splitcheck(&["verify-all", "--max-degree", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 11, "{text}");
}

#[test]
fn deterministic_across_widths() {
    let a = splitcheck(&["summand", "--n", "3", "--max-degree", "8", "--jobs", "1", "--format", "json"]);
    let b = splitcheck(&["summand", "--n", "3", "--max-degree", "8", "--jobs", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("splitcheck.toml");
    fs::write(&cfg, "format = \"csv\"\n\n[summand]\nn = 2\nmax_degree = 2\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let run = |extra: &[&str], env: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_splitcheck"));
        c.args(["summand", "--config", cfg]).args(extra).env_remove("SPLITCHECK_FORMAT");
        if let Some(f) = env {
            c.env("SPLITCHECK_FORMAT", f);
        }
        String::from_utf8(c.output().unwrap().stdout).unwrap()
    };
    assert!(run(&[], None).starts_with("degree,dim\n0,0\n"));
    assert!(run(&[], Some("json")).starts_with('{'));
    assert_eq!(run(&["--format", "text"], Some("json")), "0: 0 1 1\n");
    assert_eq!(run(&["--format", "text", "--max-degree", "3"], None), "0: 0 1 1 1\n");
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["summand", "--n", "2", "--max-degree", "6", "--cache-dir", cache.to_str().unwrap()];
    let first = stdout(&splitcheck(&args));
    let files: Vec<_> = fs::read_dir(&cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert_eq!(stdout(&splitcheck(&args)), first);
    fs::write(&files[0], "garbage").unwrap();
    assert_eq!(stdout(&splitcheck(&args)), first);
    assert!(fs::read_to_string(&files[0]).unwrap().starts_with('{'));
}

#[test]
fn writes_to_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    let o = splitcheck(&["adem", "Sq3 Sq2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read_to_string(out).unwrap(), "0\n");
}
