use std::process::{Command, Output};

use acl_lab::{canonical_code, parse_graph, Graph};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acl-lab")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

fn graph(v: &Value) -> Graph {
    serde_json::from_value(v.clone()).unwrap()
}

fn hex(g: &Graph) -> String {
    canonical_code(g).unwrap().to_hex()
}

#[test]
fn minimal_images_of_c5() {
    let (v, code) = json(&["minimal-images", "C5"]);
    assert_eq!(code, 0);
    let mut got: Vec<String> = v["result"]["images"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| hex(&graph(&i["graph"])))
        .collect();
    got.sort();
    let mut want = vec![hex(&parse_graph("C3").unwrap()), hex(&parse_graph("C5").unwrap())];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn homclosed_odd_cycles() {
    let (v, code) = json(&["homclosed", "C3", "C5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["closed"], true);
    assert_eq!(v["result"]["verdict"]["status"], "universal-exists-acl-trivial");
    let (v, _) = json(&["homclosed", "C5"]);
    assert_eq!(v["result"]["verdict"]["status"], "inconclusive");
}

#[test]
fn verify_prop2_passes() {
    let (v, code) = json(&["verify", "prop2", "--params", "1,2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracles"][0]["pass"], true);
    assert_eq!(v["oracles"][0]["params"], serde_json::json!([1, 2, 1]));
}

#[test]
fn failing_oracle_sets_exit_status() {
    let (v, code) = json(&["verify", "lemma10", "--params", "4"]);
    assert_eq!(v["oracles"][0]["pass"], false);
    assert!(v["oracles"][0]["counterexample"].is_object());
    assert_eq!(code, 1);
}

#[test]
fn input_codes_match_recomputation() {
    let specs = ["Gstar(1,2,1)", "bowtie", "join(K2, C5)", "TTP(1)", "KnK3(4)"];
    for s in specs {
        let (v, _) = json(&["construct", s]);
        let input = &v["inputs"][0];
        assert_eq!(input["code"], hex(&parse_graph(s).unwrap()), "{s}");
        assert_eq!(hex(&graph(&v["result"]["graph"])), hex(&parse_graph(s).unwrap()));
    }
    let (v, _) = json(&["homclosed", "C3 C5", "C7"]);
    let codes: Vec<&str> = v["inputs"].as_array().unwrap().iter().map(|i| i["code"].as_str().unwrap()).collect();
    let want: Vec<String> = ["C3", "C5", "C7"].iter().map(|s| hex(&parse_graph(s).unwrap())).collect();
    assert_eq!(codes, want);
}

#[test]
fn catalog_filters() {
    let (v, code) = json(&["catalog", "bow-tie"]);
    assert_eq!(code, 0);
    let c = v["citations"].as_array().unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0]["verdict"], "universal-exists");
    let (v, _) = json(&["catalog", "K_{m,n}"]);
    assert!(v["citations"][0]["bound"].as_str().unwrap().contains("8m-7"));
    let (all, _) = json(&["catalog"]);
    assert!(all["citations"].as_array().unwrap().len() > 10);
}

#[test]
fn graph_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("acl-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = parse_graph("Gstar(1,2,1)").unwrap();
    let el = dir.join("g.txt");
    let dot = dir.join("g.dot");
    std::fs::write(&el, g.to_edge_list()).unwrap();
    std::fs::write(&dot, g.to_dot("g")).unwrap();
    for p in [&el, &dot] {
        let (v, _) = json(&["construct", p.to_str().unwrap()]);
        assert_eq!(graph(&v["result"]["graph"]), g);
    }
    let out = run(&["construct", el.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(Graph::parse_dot(&String::from_utf8(out.stdout).unwrap()).unwrap(), g);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn build_writes_outputs() {
    let dir = std::env::temp_dir().join(format!("acl-lab-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("g.txt");
    let trace = dir.join("t.json");
    let (v, code) = json(&[
        "build",
        "--constraints",
        "K3",
        "--rounds",
        "1",
        "--ext-budget",
        "2",
        "--anchor-budget",
        "1",
        "--out",
        out.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["omits"], true);
    assert!(!v["notes"].as_array().unwrap().is_empty());
    let g = Graph::parse_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["order"], g.order());
    assert!(g.size() >= 1);
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["rounds"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn closure_and_witness() {
    let (v, _) = json(&["closure", "--host", "amalgam(K4,3,P2,0)", "--operator", "bowtie", "--set", "0"]);
    assert_eq!(v["result"]["a_star"], serde_json::json!([0, 1, 2, 3]));
    let (v, _) = json(&["closure", "--host", "C4", "--constraints", "P4", "--set", "0", "--operator", "path", "--len", "3"]);
    assert!(v["result"]["final"].is_array());
    let (v, _) = json(&["aclwitness", "--host", "C6", "--constraints", "C3 C5", "--set", "0,3"]);
    assert_eq!(v["result"]["closed"], true);
}

#[test]
fn usage_and_cap_errors() {
    let out = run(&["frobnicate"]);
    assert_ne!(out.status.code(), Some(0));
    let out = run(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_acl-lab"))
        .args(["images", "C5"])
        .env("ACL_LAB_CAPS", "hom=3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`hom`"));
    let out = run(&["catalog", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}
