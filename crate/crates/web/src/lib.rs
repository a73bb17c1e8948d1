//! wasm exports for the demo page. Every export returns a JSON string;
//! failures come back as `{"error": "..."}`.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use multitile_core::admissibility::{
    check_admissible, check_graph_condition, construct_distances, construct_perfect_coloring,
    multitiling_certificate, AdmissibilityError, ParamTriple,
};
use multitile_core::arith;
use multitile_core::coloring::CirculantSpec;
use multitile_core::document::ColoringDocument;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn encode<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).unwrap_or_else(error)
}

/// Colouring document for `(b, c, k)`, or the multitiling certificate when
/// `b + c` is not a prime power.
#[wasm_bindgen]
pub fn construct(b: u32, c: u32, k: u32) -> String {
    let params = match ParamTriple::new(b.into(), c.into(), k.into()) {
        Ok(p) => p,
        Err(e) => return error(e),
    };
    let witness = if arith::is_prime_power(params.sum()) {
        construct_perfect_coloring(params).map(|w| ColoringDocument::from_witness(&w, None))
    } else {
        construct_distances(params).and_then(|w| {
            let cert = multitiling_certificate(&w)?;
            Ok(ColoringDocument::from_witness(&w, Some(&cert)))
        })
    };
    match witness {
        Ok(doc) => encode(&doc),
        Err(AdmissibilityError::Inadmissible(v)) => json!({
            "constructed": false,
            "reason": "inadmissible",
            "violations": v.violations.iter().map(|x| json!({"q": x.q, "t": x.t, "bound": x.bound})).collect::<Vec<_>>(),
        })
        .to_string(),
        Err(AdmissibilityError::BoundViolated { sum, bound }) => {
            json!({"constructed": false, "reason": "bound-violated", "sum": sum, "bound": bound}).to_string()
        }
        Err(e) => error(e),
    }
}

/// Cyclotomic divisors of the structured mask of `C_P(distances)` and the
/// divisibility verdict.
#[wasm_bindgen]
pub fn spectrum(modulus: u32, distances: &[u32], b: u32, c: u32) -> String {
    let spec = match CirculantSpec::new(modulus.into(), distances.iter().map(|&d| d.into()).collect()) {
        Ok(s) => s,
        Err(e) => return error(e),
    };
    match check_graph_condition(&spec, b.into(), c.into()) {
        Ok(v) => json!({
            "P": v.modulus,
            "divisors": v.spectrum.divisors(),
            "prime_power_divisors": v.spectrum.prime_power_subset(),
            "S_at_one": v.s_at_one,
            "S_tilde_at_one": v.s_tilde_at_one,
            "N": v.reduced_sum,
            "passes": v.passes,
            "exact": v.exact,
        })
        .to_string(),
        Err(e) => error(e),
    }
}

#[derive(Serialize)]
struct Cell {
    b: u64,
    c: u64,
    admissible: bool,
    violating_q: Vec<u64>,
}

/// Admissibility of every `(b, c)` with `b, c <= max` at fixed `k`, row by row.
#[wasm_bindgen]
pub fn table(k: u32, max: u32) -> String {
    if k == 0 || max == 0 || max > 64 {
        return error("need k >= 1 and 1 <= max <= 64");
    }
    let rows: Vec<Vec<Cell>> = (1..=u64::from(max))
        .map(|b| {
            (1..=u64::from(max))
                .map(|c| {
                    let verdict = check_admissible(ParamTriple::new(b, c, k.into()).expect("positive"));
                    Cell {
                        b,
                        c,
                        admissible: verdict.admissible,
                        violating_q: verdict.violations.iter().map(|v| v.q).collect(),
                    }
                })
                .collect()
        })
        .collect();
    encode(&rows)
}
