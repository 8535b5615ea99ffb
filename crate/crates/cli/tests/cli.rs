use std::process::{Command, Output};

use serde_json::Value;

fn g25(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g25")).args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn standard_point_constructs_and_round_trips_through_certify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("std.json");
    let o = g25(&["construct", "--t", "1,1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["exact"], true);
    assert_eq!(doc["count"], 1);
    assert_eq!(doc["w_over_pi"], "40");
    assert_eq!(doc["pencil"][0][2][2][0], "-1*sqrt(6)");
    assert_eq!(doc["pencil"][0][3][3][0], "-4");
    assert_eq!(doc["pencil"][1][4][3][0], "2");
    assert_eq!(doc["certificate"]["reducible"], true);
    assert_eq!(doc["certificate"]["gram"][3][3][0], 20.0);

    let c = g25(&["certify", path.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0));
    let cert = json(&c);
    assert_eq!(cert["passes"], true);
    assert_eq!(cert["certificate"]["gram_defect"], 0.0);
}

#[test]
fn float_construction_certifies_from_its_12_digit_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eg.json");
    let o = g25(&["construct", "--t", "11/6,1331/864,19487171/17915904", "--branch", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["exact"], false);
    assert_eq!(doc["count"], 2);
    assert_eq!(doc["moduli"]["Z"], "2");
    let c = g25(&["certify", path.to_str().unwrap()]);
    assert_eq!(c.status.code(), Some(0), "{}", String::from_utf8_lossy(&c.stdout));
}

#[test]
fn family_member_near_pi_is_nearly_standard() {
    let o = g25(&["construct", "--family33", "3.14159265"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert!(doc["certificate"]["gram_defect"].as_f64().unwrap() <= 1e-8);
    let t1: f64 = doc["moduli"]["t1"].as_str().unwrap().parse().unwrap();
    assert!((t1 - 1.0).abs() < 1e-8);
}

#[test]
fn exit_codes() {
    assert_eq!(g25(&["construct", "--t", "1,1,100"]).status.code(), Some(2));
    assert_eq!(g25(&["construct", "--t", "1,one,1"]).status.code(), Some(1));
    assert_eq!(g25(&["construct", "--t", "1,1"]).status.code(), Some(1));
    assert_eq!(g25(&["construct", "--t", "1,1,1", "--bogus"]).status.code(), Some(1));
    assert_eq!(g25(&["scan", "--g", "1", "--t0-range", "1:2"]).status.code(), Some(1));
    assert_eq!(g25(&["verify-paper", "--only", "nope"]).status.code(), Some(1));
    assert_eq!(g25(&["construct", "--t", "1,1,1", "--branch", "1"]).status.code(), Some(1));
    assert_eq!(g25(&["--help"]).status.code(), Some(0));
}

#[test]
fn certify_rejects_a_broken_pencil() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    let pencil = r#"{"pencil": [[[["1","0"]], [], [["0","0"],["0","0"],["1","0"]], [], []],
                                [[], [["1","0"]], [["0","0"],["1","0"]], [], []]]}"#;
    std::fs::write(&path, pencil).unwrap();
    let o = g25(&["certify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(g25(&["certify", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn scan_is_deterministic() {
    let args = ["scan", "--g", "1", "--t0-range", "1/2:5/2:9"];
    let a = g25(&args);
    let b = g25(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi"));
    assert!(lines.all(|l| l.split(',').count() == 10 && l.contains(",true,")));
    let dat = g25(&["scan", "--g", "1", "--t0-range", "1/2:5/2:9", "--format", "dat"]);
    assert!(String::from_utf8(dat.stdout).unwrap().starts_with('#'));
}

#[test]
fn levelset_meets_at_the_endpoints() {
    let o = g25(&["levelset", "--t0-range", "1:11/6:3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][..3], &["1", "1", "0.0625"]);
    assert_eq!(rows[2][1], rows[2][2]);
}

#[test]
fn functional_reports_the_closed_form() {
    let o = g25(&["functional", "--t", "1,1/16,1/4096"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["w_over_pi"], "184/7");
    let rel: f64 = doc["relative_difference"].as_str().unwrap().parse().unwrap();
    assert!(rel < 1e-6);
}

#[test]
fn verify_paper_selected_groups() {
    let o = g25(&["verify-paper", "--only", "w_functional"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let checks = doc["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["check_name"].as_str().unwrap().starts_with("w_functional.") && c["pass"] == true));

    let verdicts = |prec: &str| {
        let o = g25(&["verify-paper", "--only", "eg_cusp,family33", "--precision", prec]);
        json(&o)["checks"].as_array().unwrap().iter().map(|c| (c["check_name"].clone(), c["pass"].clone())).collect::<Vec<_>>()
    };
    assert_eq!(verdicts("128"), verdicts("256"));
}

#[test]
fn verify_paper_full_run_passes() {
    let o = g25(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["passed"], true);
}
