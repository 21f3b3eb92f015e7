use poset_gaps_web::{analyze_view, doublefull_view, example_poset, witness_view};
use serde_json::Value;

fn json(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn doublefull_family() {
    let v = json(doublefull_view(6, 2, 6, 2, 2));
    assert!(v.get("error").is_none(), "{v}");
    assert_eq!(v["counts"].as_array().unwrap().len(), 9);
    let tags: Vec<&str> = v["indices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["tag"].as_str().unwrap())
        .collect();
    assert_eq!(tags[0], "Doubling");
    assert_eq!(v["confirmed"], true);

    let bad = json(doublefull_view(2, 1, 3, 1, 1));
    assert!(bad["error"].as_str().is_some());
}

#[test]
fn analyze_example() {
    let v = json(analyze_view(&example_poset(), true));
    assert_eq!(v["gap_sequence"], serde_json::json!(["1", "2", "4", "6", "6"]));
    assert_eq!(v["chart"]["indices"][0]["tag"], "Doubling");
    assert!(v["geometry"].is_object());
}

#[test]
fn analyze_reports_positions() {
    let v = json(analyze_view("[elements]\na b\n[covers]\na < q\n[mark]\nx = a\ny = b\n", false));
    assert_eq!(v["line"], 4);
    assert_eq!(v["column"], 5);
    let v = json(analyze_view("[elements]\na b\n[covers]\na < b\n[mark]\nx = b\ny = a\n", false));
    assert!(v["error"].as_str().unwrap().contains("x"));
}

#[test]
fn witness_on_example() {
    let text = example_poset();
    let v = json(witness_view(&text, 2, "1/2"));
    assert_eq!(v["feasible"], true);
    assert_eq!(v["v_xy"], "1/4");
    assert_eq!(v["rules_hold"], true);
    assert_eq!(json(witness_view(&text, 2, "1"))["feasible"], false);
    assert!(json(witness_view(&text, 2, "half"))["error"].is_string());
    assert!(json(witness_view(&text, 9, "1"))["error"].is_string());
}
