use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).to_str().unwrap().to_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cupstack")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn graph_size(path: &str) -> usize {
    let text = std::fs::read_to_string(path).unwrap();
    cupstack::parse_graph(&text).unwrap().n()
}

/// Fixtures with a label sidecar.
fn family_fixtures() -> Vec<String> {
    let mut names: Vec<String> = std::fs::read_dir(fixtures())
        .unwrap()
        .filter_map(|e| e.unwrap().file_name().into_string().ok())
        .filter_map(|f| f.strip_suffix(".labels.json").map(|s| format!("{s}.graph")))
        .collect();
    names.sort();
    names
}

#[test]
fn petersen_by_matching() {
    let out = run(&["decide", "-g", &fixture("petersen.graph"), "-r", "0", "--method", "ecc2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["stackable"], true);
    assert_eq!(v["method"], "ecc2");
}

#[test]
fn star_leaf_is_rejected() {
    let out = run(&["decide", "-g", &fixture("star3.graph"), "-r", "1", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["stackable"], false);
}

#[test]
fn p4_plan_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    let g = fixture("p4.graph");
    let out = run(&["plan", "-g", &g, "-r", "0", "-o", plan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&plan).unwrap();
    assert_eq!(text, r#"{"n":4,"target":0,"moves":[[2,1],[1,3],[3,0]]}"#);
    let out = run(&["verify", "-g", &g, "-p", plan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "accept");
}

#[test]
fn rejected_plan_names_the_step() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    std::fs::write(&plan, r#"{"n":4,"target":0,"moves":[[3,0]]}"#).unwrap();
    let out = run(&["verify", "-g", &fixture("p4.graph"), "-p", plan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["step"], 1);
}

#[test]
fn usage_and_io_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":4,"moves":"nope"}"#).unwrap();
    let out = run(&["verify", "-g", &fixture("p4.graph"), "-p", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed plan"));
    assert_eq!(run(&["verify", "-g", "/nonexistent.graph", "-p", "x"]).status.code(), Some(2));
    assert_eq!(run(&["decide", "-g", &fixture("p4.graph"), "-r", "7"]).status.code(), Some(2));
    assert_eq!(run(&["decide", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["cube", "-d", "19"]).status.code(), Some(2));
    let out = run(&["decide", "-g", &fixture("far_component.graph"), "-r", "0", "--method", "family"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let out = run(&["decide", "-g", &fixture("petersen.graph"), "-r", "0", "--method", "oracle", "--budget", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["stackable"], Value::Null);
    let out = Command::new(env!("CARGO_BIN_EXE_cupstack"))
        .args(["oracle", "-g", &fixture("petersen.graph"), "-r", "0"])
        .env("CUPSTACK_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn auto_agrees_with_oracle_on_small_fixtures() {
    let mut graphs = family_fixtures();
    graphs.push("far_component.graph".into());
    for name in graphs {
        let g = fixture(&name);
        if graph_size(&g) > 10 {
            continue;
        }
        for r in 0..graph_size(&g) {
            let r = r.to_string();
            let oracle = run(&["decide", "-g", &g, "-r", &r, "--method", "oracle"]);
            if oracle.status.code() == Some(3) {
                continue;
            }
            let auto = run(&["decide", "-g", &g, "-r", &r]);
            assert_eq!(auto.status.code(), oracle.status.code(), "{name} r={r}");
            assert_eq!(json(&auto)["stackable"], json(&oracle)["stackable"], "{name} r={r}");
        }
    }
}

#[test]
fn plan_then_verify_for_every_family_fixture() {
    let dir = tempfile::tempdir().unwrap();
    for name in family_fixtures() {
        let g = fixture(&name);
        let n = graph_size(&g);
        for r in [0, n / 2, n - 1] {
            let plan = dir.path().join(format!("{name}.{r}.json"));
            let r = r.to_string();
            let out = run(&["plan", "-g", &g, "-r", &r, "-o", plan.to_str().unwrap()]);
            match out.status.code() {
                Some(0) => {
                    let v = run(&["verify", "-g", &g, "-p", plan.to_str().unwrap()]);
                    assert_eq!(v.status.code(), Some(0), "{name} r={r}: {}", String::from_utf8_lossy(&v.stdout));
                }
                Some(1) => assert!(name.starts_with("star3") || name.starts_with("k411"), "{name} r={r}"),
                code => panic!("{name} r={r}: exit {code:?}"),
            }
        }
    }
}

#[test]
fn gen_writes_graph_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.graph");
    let out = run(&["gen", "kneser", "8", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("k.labels.json")).unwrap()).unwrap();
    assert_eq!(side["family"], "kneser");
    assert_eq!(side["labels"].as_array().unwrap().len(), 56);
    assert_eq!(std::fs::read(&path).unwrap(), std::fs::read(fixture("kneser_8_3.graph")).unwrap());
    let out = run(&["decide", "-g", path.to_str().unwrap(), "-r", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_stable() {
    for args in [
        vec!["plan", "-g", "petersen.graph", "-r", "3"],
        vec!["ge", "-g", "kneser_8_3.graph"],
        vec!["decide", "-g", "grid_9x8.graph", "-r", "11"],
    ] {
        let args: Vec<String> =
            args.iter().map(|a| if a.ends_with(".graph") { fixture(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn dumps() {
    let v = json(&run(&["scd", "-n", "2"]));
    assert_eq!(v["chains"], serde_json::json!([[[], [1], [1, 2]], [[2]]]));
    let v = json(&run(&["gray", "-m", "6", "-k", "4"]));
    assert_eq!(v["cycle"].as_array().unwrap().len(), 15);
    let out = run(&["cube", "-d", "8", "--verify", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["verdict"], "accept");
    assert_eq!(v["plan"]["moves"].as_array().unwrap().len(), 255);
}
