use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn andbip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_andbip"))
        .args(args)
        .env_remove("ANDBIP_SOLVER_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn gen_writes_dimacs() {
    let o = andbip(&["gen", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");

    let o = andbip(&["gen", "--k", "3"]);
    let text = stdout(&o);
    assert!(text.starts_with("p edge 8 12\n"));
    assert_eq!(text.lines().count(), 13);
    assert!(text.contains("e 1 8\n"));
}

#[test]
fn gen_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("and4.col");
    let o = andbip(&["gen", "--k", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("p edge 11 22\n"));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["gen", "--k", "1"][..],
        &["gen"],
        &["frobnicate"],
        &["survey", "--kmin", "3", "--kmax", "2"],
        &["verify", "--k", "3", "--drop", "9-9"],
        &["verify", "--k", "3", "--drop", "0-4"],
        &["construct", "--k", "4", "--format", "yaml"],
    ] {
        let o = andbip(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(andbip(&["--help"]).status.code(), Some(0));
}

#[test]
fn construct_emits_one_witness_per_edge() {
    for (k, size) in [(2, 1), (5, 6), (4, 4)] {
        let o = andbip(&["construct", "--k", &k.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        let doc = json(&o);
        assert_eq!(doc["k"], k);
        assert_eq!(doc["size"], size);
        assert_eq!(doc["witnesses"].as_object().unwrap().len(), size);
        let u1 = doc["u1"].as_array().unwrap().len();
        let u2 = doc["u2"].as_array().unwrap().len();
        assert_eq!(u1 + u2, size);
    }
    let doc = json(&andbip(&["construct", "--k", "2"]));
    assert_eq!(
        doc["witnesses"]["1-2"],
        serde_json::json!({"layer": 2, "type": "base", "cycle": [1, 2, 3, 4, 0]})
    );
}

#[test]
fn construct_edgelist() {
    let o = andbip(&["construct", "--k", "3", "--format", "edgelist"]);
    assert_eq!(
        stdout(&o),
        "# k=3 n=8 |F|=2\n0 1 3 D 0 0 1 5 6 7\n4 5 3 C 0 5 4 3 7 6\n"
    );
}

#[test]
fn verify_range_passes() {
    let o = andbip(&["verify", "--all", "20", "--strong"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(": PASS")).count(), 19);
    assert!(text.ends_with("all claims pass\n"));
}

#[test]
fn verify_json_lists_claims() {
    let o = andbip(&["verify", "--k", "4", "--strong", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let entry = &doc[0];
    assert_eq!(entry["k"], 4);
    assert_eq!(entry["passed"], true);
    let names: Vec<&str> = entry["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"minimality: shortest odd cycle through each restored edge has length 5"));
}

#[test]
fn dropping_an_edge_fails_verification() {
    let o = andbip(&["verify", "--k", "5", "--drop", "0-1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL minimality: remainder is bipartite"), "{text}");
    assert!(text.ends_with("verification FAILED\n"));

    let o = andbip(&["verify", "--k", "5", "--drop", "0-1", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let doc = json(&o);
    let failed: Vec<&Value> = doc[0]["claims"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["counterexample"]["kind"], "cycle");
}

#[test]
fn alternative_bipartification_verifies() {
    let o = andbip(&["verify", "--k", "6", "--alternative", "--strong"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn solve_and2() {
    let o = andbip(&["solve", "--k", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["optimum"], 1);
    assert_eq!(doc["cut_value"], 4);
    assert_eq!(doc["conjecture"]["verdict"], "confirmed");
    assert!(doc.get("metadata").is_none());

    let o = andbip(&["solve", "--k", "2", "--json", "--with-metadata"]);
    assert!(json(&o)["metadata"]["wall_time_ms"].is_number());
}

#[test]
fn solve_bipartite_dimacs_has_optimum_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.col");
    fs::write(&path, "c hexagon\np edge 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n").unwrap();
    let o = andbip(&["solve", "--dimacs", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["optimum"], 0);
    assert_eq!(doc["witness_deletion"], serde_json::json!([]));
    assert!(doc.get("conjecture").is_none());
}

#[test]
fn solve_reports_malformed_dimacs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.col");
    for bad in ["p edge 3 1\ne 0 1\n", "p edge 3 1\ne 2 2\n", "e 1 2\n"] {
        fs::write(&path, bad).unwrap();
        let o = andbip(&["solve", "--dimacs", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(64), "{bad:?}");
    }
    let o = andbip(&["solve", "--dimacs", dir.path().join("absent.col").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oversized_instances_are_skipped() {
    let o = andbip(&["solve", "--k", "40"]);
    assert_eq!(o.status.code(), Some(3));
    let o = andbip(&["solve", "--k", "12", "--cap", "20"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_andbip"))
        .args(["solve", "--k", "8"])
        .env("ANDBIP_SOLVER_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumeration_finds_disjoint_minimum_sets() {
    let o = andbip(&["solve", "--k", "3", "--enumerate", "10", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let sets = doc["enumeration"]["sets"].as_array().unwrap();
    assert_eq!(sets.len(), 4);
    assert_eq!(doc["enumeration"]["truncated"], false);
}

#[test]
fn survey_rows() {
    let o = andbip(&["survey", "--kmin", "2", "--kmax", "10", "--solve-upto", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "k,n,edges,sizeF,sizeAlt,erdosBound,strict,solverOptimum,verdict");
    assert_eq!(lines[1], "2,5,5,1,1,1.000000,false,1,confirmed");
    assert_eq!(lines[4], "5,14,35,6,10,7.840000,true,6,confirmed");
    assert_eq!(lines[9], "10,29,145,25,45,33.640000,true,,");
}

#[test]
fn survey_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("survey.csv");
    let o = andbip(&["survey", "--kmin", "2", "--kmax", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "k,n,edges,sizeF,sizeAlt,erdosBound,strict,solverOptimum,verdict\n\
         2,5,5,1,1,1.000000,false,,\n\
         3,8,12,2,3,2.560000,true,,\n"
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["construct", "--k", "11"][..],
        &["verify", "--all", "10", "--json"],
        &["survey", "--kmin", "2", "--kmax", "8", "--solve-upto", "6"],
        &["solve", "--k", "6", "--json"],
    ] {
        let a = andbip(args);
        let b = andbip(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
