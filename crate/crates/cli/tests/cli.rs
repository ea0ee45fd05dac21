use std::process::{Command, Output};

use serde_json::Value;

fn wonderful(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wonderful")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let out = wonderful(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn unsupported_type_exits_one() {
    let out = wonderful(&["rootsys", "--type", "XX9"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotFiniteType"));
}

#[test]
fn malformed_input_exits_one() {
    for args in [
        vec!["parahoric", "--type", "A2", "--theta", "1/3"],
        vec!["parahoric", "--type", "A2", "--theta", "1/0,1"],
        vec!["parahoric", "--type", "A1", "--theta", "1/2", "--a", "-1/2"],
        vec!["restrict", "--type", "A2", "--k", "1,-1"],
        vec!["covers", "--type", "A1", "--theta", "3/2"],
        vec!["rootsys"],
        vec!["frobnicate"],
        vec!["verify", "--all", "--suite", "rootsys"],
        vec!["verify", "--suite", "nope", "--type", "A1"],
        vec!["chart", "--type", "A1", "--word", "s5"],
    ] {
        assert_eq!(wonderful(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(wonderful(&["--help"]).status.code(), Some(0));
    assert_eq!(wonderful(&["--version"]).status.code(), Some(0));
}

#[test]
fn rootsys_json() {
    let v = json(&["rootsys", "--type", "G2", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["num_roots"], 12);
    assert_eq!(v["weyl_order"], 12);
    assert_eq!(v["c"], serde_json::json!([3, 2]));
    assert_eq!(v["d"], serde_json::json!([3, 2]));
}

#[test]
fn explicit_cartan_file() {
    let dir = std::env::temp_dir().join(format!("wonderful-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("b2.json");
    std::fs::write(&good, "[[2,-1],[-2,2]]").unwrap();
    let v = json(&["rootsys", "--cartan", good.to_str().unwrap(), "--json"]);
    assert_eq!(v["num_roots"], 8);
    let bad = dir.join("affine.json");
    std::fs::write(&bad, "[[2,-2],[-2,2]]").unwrap();
    assert_eq!(wonderful(&["rootsys", "--cartan", bad.to_str().unwrap()]).status.code(), Some(1));
    let both = wonderful(&["rootsys", "--type", "A1", "--cartan", good.to_str().unwrap()]);
    assert_eq!(both.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn iwahori_generators() {
    let out = wonderful(&["parahoric", "--type", "A2", "--theta", "1/3,1/3", "--generators"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("T(A)"));
    assert!(text.contains("u_[-1,-1](z^1 A)"));
    assert!(text.contains("u_[1,1](z^0 A)"));
    assert_eq!(text.lines().count(), 7);
}

#[test]
fn rationals_serialize_as_fractions() {
    let v = json(&["parahoric", "--type", "A1", "--theta", "2", "--a", "1", "--json"]);
    assert_eq!(v["theta"], serde_json::json!(["2/1"]));
    assert_eq!(v["a"], "1/1");
}

#[test]
fn restrict_reports_defect() {
    let v = json(&["restrict", "--type", "A2", "--k", "1,1", "--json"]);
    let rows = v["roots"].as_array().unwrap();
    let lowest = rows.iter().find(|r| r["root"] == serde_json::json!([-1, -1])).unwrap();
    assert_eq!(lowest["direct"], 1);
    assert_eq!(lowest["pullback"], 2);
    assert_eq!(lowest["defect"], 1);
}

#[test]
fn covers_json() {
    let v = json(&["covers", "--type", "A2", "--theta", "1/3,1/3", "--json"]);
    assert_eq!(v["roundtrip"], true);
    assert_eq!(v["cover"]["d"], 3);
    assert_eq!(v["parabolic"]["weights"], serde_json::json!(["0/1", "1/3", "2/3"]));
}

#[test]
fn dot_outputs() {
    let orbits = stdout(&wonderful(&["orbits", "--type", "A3", "--dot"]));
    assert!(orbits.starts_with("digraph orbits {"));
    assert_eq!(orbits.matches(" -> ").count(), 12);
    let building = stdout(&wonderful(&["building", "--type", "A2", "--radius", "2", "--dot"]));
    assert!(building.starts_with("graph building {"));
    assert!(building.trim_end().ends_with('}'));
}

#[test]
fn building_json_ids() {
    let v = json(&["building", "--type", "A1", "--radius", "1", "--json"]);
    let ids: Vec<&str> = v["nodes"].as_array().unwrap().iter().map(|n| n["id"].as_str().unwrap()).collect();
    assert_eq!(ids, vec!["e:a0,a1", "e:a0", "e:a1", "s0:a0,a1", "s0:a0", "s1:a0,a1", "s1:a1"]);
}

#[test]
fn verify_single_type_and_repeatability() {
    let a = wonderful(&["verify", "--all", "--type", "A2"]);
    assert_eq!(a.status.code(), Some(0));
    let b = wonderful(&["verify", "--all", "--type", "A2"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&["verify", "--suite", "rootsys", "--type", "B2", "--json", "--seed", "9"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 9);
}
