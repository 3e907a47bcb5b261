use serde_json::Value;
use trophilb_web::{membership_grid, pairs, subdivision};

fn parse(s: Result<String, String>) -> Value {
    serde_json::from_str(&s.expect("operation succeeds")).expect("valid json")
}

#[test]
fn subdivision_summary() {
    let v = parse(subdivision(2, "0,0,0,1,1,1"));
    assert_eq!(v["cells"], 4);
    assert_eq!(v["in_region_p"], true);
    assert!(v["svg"].as_str().unwrap().starts_with("<svg"));
    let flat = parse(subdivision(2, "0,0,0,0,0,0"));
    assert_eq!(flat["in_region_p"], false);
    assert!(flat["witness_heights"].is_array());
    assert!(subdivision(2, "0,0").is_err());
}

#[test]
fn pairs_summary() {
    let v = parse(pairs("1", "1", "1", "2"));
    assert_eq!(v["case"], "P");
    assert_eq!(v["matches_table"], true);
    assert!(v["trop_point"].as_array().unwrap().iter().all(|c| c == "0"));
    assert!(pairs("1", "1", "1", "1").is_err());
}

#[test]
fn membership_of_a_line() {
    let v = parse(membership_grid("x0 + x1 + x2", "1,1", -2, 2, 5));
    assert_eq!(v["points"], 25);
    let members: Vec<(String, String)> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
        .collect();
    // the tropical line max(0, w1, w2) attained twice
    for (p, q) in &members {
        let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
        let vals = [0, p, q];
        let top = *vals.iter().max().unwrap();
        assert!(vals.iter().filter(|&&x| x == top).count() >= 2);
    }
    assert_eq!(members.len(), 7);
    assert!(membership_grid("x0", "1,1", 0, 0, 5).is_err());
}
