use std::process::{Command, Output};

use gendelta::omp::Omp;
use gendelta::paths::PldPath;
use gendelta::symfunc::SymFun;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gendelta")).args(args).env("GENDELTA_THREADS", "1").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["bijection", "--map", "phi", "0|3|20|1|310|32"]), "310|3|20|1|30|2\n");
    assert_eq!(stdout(&["stat", "--omp", "10|1|320|21"]), "10|1|320|21  inv=4  dinv=7  maj=7\n");
    assert_eq!(stdout(&["delta", "--n", "1", "--k", "1", "--m", "0", "--flavor", "q"]), "m[1]\n");
}

#[test]
fn configuration_is_echoed() {
    let out = run(&["delta", "--n", "2", "--k", "1"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("# threads=1 Delta { n: 2, k: 1, m: 0, flavor: Q"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["stat", "--omp", "1|1", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["stat", "--omp", "11"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "--map", "xi", "NNEE [2,1]"]).status.code(), Some(1));
    assert_eq!(run(&["bijection", "--map", "xi", "--inverse", "1|10"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--max-total", "2", "--format", "csv"]).status.code(), Some(0));
}

#[test]
fn printed_objects_parse_back() {
    for line in stdout(&["enumerate-omps", "--m", "1", "--n", "3", "--k", "1"]).lines() {
        let text = line.split("  ").next().unwrap();
        assert_eq!(text.parse::<Omp>().unwrap().to_string(), text);
    }
    for line in stdout(&["enumerate-paths", "--m", "1", "--n", "2", "--k", "1"]).lines() {
        let text = line.split("  ").next().unwrap();
        assert_eq!(text.parse::<PldPath>().unwrap().to_string(), text);
    }
    let json = stdout(&["enumerate-paths", "--m", "0", "--n", "2", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    for r in rows {
        let p: PldPath = serde_json::from_value(r["path"].clone()).unwrap();
        assert_eq!(r["area"], p.area());
    }
    let f = stdout(&["delta", "--n", "3", "--k", "2", "--m", "1", "--flavor", "t"]);
    let parsed: SymFun = f.trim().parse().unwrap();
    assert_eq!(parsed.to_string(), f.trim());
    let j = stdout(&["delta", "--n", "3", "--k", "2", "--m", "1", "--flavor", "t", "--format", "json"]);
    assert_eq!(SymFun::from_json(j.trim()).unwrap(), parsed);
    let inv = stdout(&["bijection", "--map", "eta", "--inverse", "310|60|5|42"]);
    assert_eq!(stdout(&["bijection", "--map", "eta", inv.trim()]), "310|60|5|42\n");
}

#[test]
fn reports_are_reproducible() {
    let a = stdout(&["verify", "--max-total", "3"]);
    let b = stdout(&["verify", "--max-total", "3"]);
    assert_eq!(a, b);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&a).unwrap();
    assert!(rows.iter().all(|r| r["status"] == "pass"));
    assert!(rows.iter().any(|r| r["id"] == "main_theorem_t0"));
}

#[test]
fn tables() {
    let csv = stdout(&["check", "delta-side", "--max-n", "2"]);
    assert!(csv.starts_with("identity,parameters,result\n"));
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",pass")));
    let e = stdout(&["stat", "--m", "1", "--n", "2", "--k", "1", "--stat", "dinv", "--restriction", "R"]);
    assert_eq!(e, "(2 + q)*m[1,1] + m[2]\n");
    let dump: serde_json::Value = serde_json::from_str(&stdout(&["dump-macdonald", "--n", "2"])).unwrap();
    assert_eq!(dump["entries"].as_array().unwrap().len(), 2);
}
