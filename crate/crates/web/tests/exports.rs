use multitile_web::{construct, spectrum, table};
use serde_json::{json, Value};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn construct_returns_documents_and_refusals() {
    let v = parse(construct(1, 1, 1));
    assert_eq!(v["P"], 4);
    assert_eq!(v["colors"], "BBWW");

    let v = parse(construct(5, 1, 2));
    assert!(v.get("colors").is_none());
    assert!(v["multitiling"]["values"].is_array());

    assert_eq!(parse(construct(4, 3, 2))["reason"], "bound-violated");
    assert_eq!(parse(construct(4, 2, 1))["reason"], "inadmissible");
    assert!(parse(construct(0, 1, 1))["error"].is_string());
}

#[test]
fn spectrum_of_four_cycle() {
    let v = parse(spectrum(4, &[1], 1, 1));
    assert_eq!(v["divisors"], json!([4]));
    assert_eq!(v["passes"], true);
    assert_eq!(parse(spectrum(5, &[1], 1, 1))["passes"], false);
    assert!(parse(spectrum(4, &[], 1, 1))["error"].is_string());
}

#[test]
fn table_grid() {
    let v = parse(table(3, 8));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.as_array().unwrap().len() == 8));
    assert_eq!(rows[4][2], json!({"b": 5, "c": 3, "admissible": false, "violating_q": [2]}));
    assert!(parse(table(0, 8))["error"].is_string());
}
