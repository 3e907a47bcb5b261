use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use trophilb::hilbpoint::TropHilbertPoint;
use trophilb::valfield::PuiseuxRat;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trophilb")).args(args).env_remove("TROPHILB_OUTPUT").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (serde_json::from_str(&stdout(&o)).expect("valid json"), o.status.code().expect("exit code"))
}

#[test]
fn member_on_the_line() {
    let line = fixture("line.json");
    let o = run(&["member", "--ideal", &line, "--m", "1,1", "--omega", "0,0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "member: true");
    let o = run(&["member", "--ideal", &line, "--m", "1,1", "--omega", "0,1,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "member: false");
}

#[test]
fn member_over_a_grid() {
    let line = fixture("line.json");
    let (v, code) = json(&["member", "--ideal", &line, "--m", "1,1", "--grid", "0,0,0;0,1,1;0,-1,0"]);
    assert_eq!(code, 0);
    let flags: Vec<bool> = v.as_array().unwrap().iter().map(|r| r["member"].as_bool().unwrap()).collect();
    assert_eq!(flags, vec![true, true, true]);
}

#[test]
fn witness_certifies_non_members() {
    let line = fixture("line.json");
    let (v, code) = json(&["witness", "--ideal", &line, "--m", "1,1", "--omega", "0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["monomial"], serde_json::json!([0, 1, 0]));
    let o = run(&["witness", "--ideal", &line, "--m", "1,1", "--omega", "0,0,0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn pairs_generic_point() {
    let (v, code) = json(&["pairs", "--a", "1", "--b", "1", "--c", "1", "--l", "2", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["case"], "P");
    assert_eq!(v["pluecker"].as_array().unwrap().len(), 15);
    let t: TropHilbertPoint = serde_json::from_value(v["trop_point"].clone()).unwrap();
    assert!(t.0.coords().iter().all(|c| c.to_string() == "0"));
    assert_eq!(v["check"], true);
}

#[test]
fn pairs_on_a_ray() {
    let (v, code) = json(&["pairs", "--a", "1", "--b", "1", "--c", "1", "--l", "-1 + t", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["case"], "ray3");
    assert_eq!(v["mu"], "1");
}

#[test]
fn json_round_trips() {
    let (v, _) = json(&["pairs", "--a", "t", "--b", "2", "--c", "t^-1", "--l", "t^-3"]);
    let coords: Vec<PuiseuxRat> = serde_json::from_value(v["pluecker"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&coords).unwrap(), v["pluecker"]);
    let t: TropHilbertPoint = serde_json::from_value(v["trop_point"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&t).unwrap(), v["trop_point"]);
    let (h, code) = json(&["hilbert-point", "--ideal", &fixture("double_point.json"), "--m", "2"]);
    assert_eq!(code, 0);
    let t: TropHilbertPoint = serde_json::from_value(h["trop_point"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&t).unwrap(), h["trop_point"]);
}

#[test]
fn numpoly_commands() {
    let o = run(&["numpoly", "eval", "--m", "2", "--x", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
    let (v, _) = json(&["numpoly", "decompose", "--coeffs", "1,3/2,1/2"]);
    assert_eq!(v["m"], serde_json::json!([1, 1, 1]));
    let (v, _) = json(&["numpoly", "decompose", "--coeffs", "1,2"]);
    assert_eq!(v["m"], serde_json::json!([2, 2]));
}

#[test]
fn polynomial_commands() {
    let (v, code) = json(&["trop-eval", "--poly", "x0 + t*x1 + x2", "--omega", "0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["points"][0]["value"], "0");
    let o = run(&["zero-locus", "--poly", "x0 + t*x1 + x2", "--omega", "0,2,0"]);
    assert_eq!(o.status.code(), Some(1));
    let (v, _) = json(&["initial-form", "--poly", "x0 + t*x1 + x2", "--omega", "0,1,0"]);
    assert_eq!(v["points"][0]["initial_form"].as_array().unwrap().len(), 3);
}

#[test]
fn monideal_commands() {
    let (v, code) = json(&["monideal", "decompose", "--ideal", "x0^2, x0*x1", "--nvars", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    let (v, _) = json(&["monideal", "saturate", "--ideal", "x0^2, x0*x1", "--nvars", "3", "--f", "x1"]);
    assert_eq!(v["saturation"], "(x0)");
    assert_eq!(v["ell"], 1);
    let (v, _) = json(&["monideal", "colon", "--ideal", "x0^2, x0*x1", "--nvars", "3", "--f", "x0"]);
    assert_eq!(v["colon"], "(x1, x0)");
    let (v, _) = json(&["monideal", "adeg", "--ideal", "x0^2, x0*x1", "--nvars", "3"]);
    assert_eq!(v["total"], 2);
}

#[test]
fn subdiv_reports_and_draws() {
    let path = std::env::temp_dir().join(format!("trophilb-cli-test-{}.svg", std::process::id()));
    let p = path.display().to_string();
    let (v, code) = json(&["subdiv", "--d", "2", "--heights", "0,0,0,1,1,1", "--svg", &p]);
    assert_eq!(code, 0);
    assert_eq!(v["cells"].as_array().unwrap().len(), 4);
    assert_eq!(v["in_region_p"], true);
    assert_eq!(v["balanced"], true);
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("<svg"));
    let _ = std::fs::remove_file(&path);
    let (v, _) = json(&["subdiv", "--d", "2", "--heights", "0,0,0,0,0,0"]);
    assert_eq!(v["in_region_p"], false);
    assert!(v["witness_heights"].is_array());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["pairs", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["member", "--gens", "x0 +", "--m", "1,1", "--omega", "0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["subdiv", "--d", "2", "--heights", "0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["pairs", "--a", "1", "--b", "1", "--c", "1", "--l", "1"]).status.code(), Some(3));
    let wrong = run(&["hilbert-point", "--gens", "x0^2; x0*x1; x1^2", "--m", "2"]);
    assert_eq!(wrong.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "selftest", "--suite", "numpoly", "--seed", "5"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["suites"][0]["elapsed"] = Value::Null;
        v
    };
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip(a), strip(b));
    let pairs = ["pairs", "--a", "t", "--b", "2", "--c", "1", "--l", "t^-3"];
    assert_eq!(stdout(&run(&pairs)), stdout(&run(&pairs)));
}

#[test]
fn output_mode_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_trophilb"))
        .args(["numpoly", "eval", "--m", "1,1", "--x", "3"])
        .env("TROPHILB_OUTPUT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "4");
}
