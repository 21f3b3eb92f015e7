//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain values and returns a JSON string. Errors come
//! back as `{"error": "...", "line": .., "column": ..}` rather than as
//! exceptions, so the page only has one path to handle.

use poset_gaps::classify::{gen_doublefull, shape_of, verify_theorems};
use poset_gaps::conditions::condition_profile;
use poset_gaps::format::{parse, render};
use poset_gaps::geometry::{check_witness_rules, parse_rational, rational_string, solve_witness};
use poset_gaps::linext::gap_sequence;
use poset_gaps::report::{analyze, AnalyzeOptions};
use poset_gaps::{Error, MarkedPoset};
use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn error_json(e: &Error) -> Value {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => json!({ "error": message, "line": line, "column": column }),
        other => json!({ "error": other.to_string() }),
    }
}

fn finish(v: Result<Value, Error>) -> String {
    v.unwrap_or_else(|e| error_json(&e)).to_string()
}

#[derive(Serialize)]
struct IndexRow {
    k: usize,
    tag: String,
    conditions: [bool; 5],
}

fn sequence_view(m: &MarkedPoset) -> Value {
    let seq = gap_sequence(m);
    let report = verify_theorems(m);
    let rows: Vec<IndexRow> = report
        .records
        .iter()
        .map(|r| {
            let p = condition_profile(m, r.class.k).expect("interior index");
            IndexRow {
                k: r.class.k,
                tag: format!("{:?}", r.class.tag),
                conditions: [p.m, p.m_star, p.e, p.e_star, p.c],
            }
        })
        .collect();
    let shape = shape_of(&seq);
    let segments: Vec<Value> = shape
        .segments
        .iter()
        .map(|s| match s {
            Some(s) => json!([s.start, s.end]),
            None => Value::Null,
        })
        .collect();
    json!({
        "counts": seq.counts().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "indices": rows,
        "segments": segments,
        "confirmed": report.confirmed(),
    })
}

/// Gap sequence, per-index tags and condition flags of the two-chain family.
pub fn doublefull_view(r: usize, s: usize, t: usize, u: usize, v: usize) -> String {
    finish(gen_doublefull(r, s, t, u, v).map(|m| {
        let mut view = sequence_view(&m);
        view["poset"] = Value::String(render(&m));
        view
    }))
}

/// Full report for a poset file; `geometry` adds the polytope section.
pub fn analyze_view(text: &str, geometry: bool) -> String {
    finish(parse(text).and_then(|m| {
        let report = analyze(&m, &AnalyzeOptions { k: None, geometry })?;
        let mut v = serde_json::to_value(&report).expect("report serializes");
        v["chart"] = sequence_view(&m);
        Ok(v)
    }))
}

/// Solves the translation system at index `k` and scale `a` (a fraction
/// such as `1/2`).
pub fn witness_view(text: &str, k: usize, a: &str) -> String {
    let a = match parse_rational(a) {
        Some(a) => a,
        None => return json!({ "error": format!("cannot read {a:?} as a fraction") }).to_string(),
    };
    finish(parse(text).and_then(|m| {
        let w = solve_witness(&m, k, &a)?;
        Ok(match w {
            None => json!({ "feasible": false, "a": rational_string(&a) }),
            Some(w) => {
                let p = w.working.poset();
                json!({
                    "feasible": true,
                    "a": rational_string(&a),
                    "elements": (0..p.len()).map(|z| p.label(z)).collect::<Vec<_>>(),
                    "v": w.v.to_strings(),
                    "v_xy": rational_string(&w.v_xy()),
                    "null_space": w.null_space.iter().map(|d| d.to_strings()).collect::<Vec<_>>(),
                    "constraints": w.constraints.len(),
                    "rules_hold": check_witness_rules(&w),
                })
            }
        })
    }))
}

#[wasm_bindgen]
pub fn doublefull(r: usize, s: usize, t: usize, u: usize, v: usize) -> String {
    doublefull_view(r, s, t, u, v)
}

#[wasm_bindgen]
pub fn analyze_poset(text: &str, geometry: bool) -> String {
    analyze_view(text, geometry)
}

#[wasm_bindgen]
pub fn witness(text: &str, k: usize, a: &str) -> String {
    witness_view(text, k, a)
}

/// The six-element example as a poset file, for the page's default input.
#[wasm_bindgen]
pub fn example_poset() -> String {
    render(&poset_gaps::classify::gen_weird())
}
