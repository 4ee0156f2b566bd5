//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export returns a JSON string; errors become JS exceptions carrying
//! the library's message. The `*_json` functions hold the logic so they can
//! be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use twdl_core::bounds::{bound_dtset_lower, bound_dtset_upper, bound_kset_lower, bound_tset, BoundValue};
use twdl_core::extraction::{extract_degree_d_tset, extract_tset};
use twdl_core::generators::{generate, interval_model, Family, GenParams, Generated, IntervalKind};
use twdl_core::graph::vd_set;
use twdl_core::interval::{interval_bounded_degree_mis, swap_to_bounded_degree};
use twdl_core::oracles::oracle_alpha;

fn opt(v: i32) -> Option<usize> {
    (v >= 0).then_some(v as usize)
}

/// Generates an instance and extracts a t-set from it. Negative `n`, `d`,
/// `s` or `n0` mean "not given"; a negative `dmax` means no degree bound.
#[allow(clippy::too_many_arguments)]
pub fn extraction_json(family: &str, n: i32, k: usize, d: i32, s: i32, n0: i32, t: usize, dmax: i32, seed: u32) -> Result<String, String> {
    let fam: Family = family.parse().map_err(|e: twdl_core::Error| e.to_string())?;
    let params = GenParams {
        n: opt(n),
        k: Some(k),
        d: opt(d),
        s: opt(s),
        n0: opt(n0),
        seed: seed as u64,
    };
    let (g, r) = match generate(fam, &params, false).map_err(|e| e.to_string())? {
        Generated::Graph { graph, r } => (graph, r),
        Generated::Intervals(_) => return Err("interval families belong to the interval panel".into()),
    };
    let set = match opt(dmax) {
        Some(dm) => extract_degree_d_tset(&g, k, t, dm),
        None => extract_tset(&g, k, t),
    }
    .map_err(|e| e.to_string())?;
    let n = g.n();
    let mut bounds = vec![json!({ "name": "(t+1)n/(k+1)", "value": bound_tset(n, k, t).map_err(|e| e.to_string())?.value.to_string() })];
    if let Some(dm) = opt(dmax).filter(|&dm| dm >= 2 * k) {
        if let Ok(b) = bound_dtset_lower(n, k, t, dm) {
            bounds.push(json!({ "name": "degree-bounded lower", "value": b.value.to_string() }));
        }
    }
    Ok(json!({
        "n": n,
        "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "degrees": g.degrees(),
        "r": r,
        "coloring": set.coloring,
        "selected": set.vertices,
        "witness_width": set.witness_width,
        "guaranteed": set.guaranteed,
        "low_degree": opt(dmax).map(|dm| vd_set(&g, dm)),
        "bounds": bounds,
    })
    .to_string())
}

/// Largest `n` plotted by [`bounds_json`].
pub const MAX_CURVE_N: usize = 2000;

/// Bound curves over `n` for fixed `k`, `t`, `d`.
pub fn bounds_json(k: usize, t: usize, d: usize, n_max: usize) -> String {
    // Inapplicable parameter combinations plot as gaps.
    let f = |r: twdl_core::Result<BoundValue>| match r {
        Ok(b) => json!(*b.value.numer() as f64 / *b.value.denom() as f64),
        Err(_) => Value::Null,
    };
    let mut rows: Vec<Value> = Vec::new();
    let k = k.min(MAX_CURVE_N / 2);
    for n in 2 * k + 1..=n_max.clamp(2 * k + 1, MAX_CURVE_N) {
        rows.push(json!({
            "n": n,
            "tset": f(bound_tset(n, k, t)),
            "kset_lower": f(bound_kset_lower(n, k, d)),
            "dtset_lower": if d >= 2 * k { f(bound_dtset_lower(n, k, t, d)) } else { Value::Null },
            "dtset_upper": if t < k { f(bound_dtset_upper(n, k, t, d)) } else { Value::Null },
        }));
    }
    json!({ "k": k, "t": t, "d": d, "rows": rows }).to_string()
}

/// A random interval model with the greedy degree-`2k` set and the swap
/// sequence applied to an exhaustive maximum independent set.
pub fn interval_json(n: usize, k: usize, seed: u32) -> Result<String, String> {
    let m = interval_model(IntervalKind::Random, n, k, seed as u64).map_err(|e| e.to_string())?;
    let g = m.intersection_graph();
    let greedy = interval_bounded_degree_mis(&m, k).map_err(|e| e.to_string())?;
    let alpha = oracle_alpha(&g).map_err(|e| e.to_string())?;
    let swapped = swap_to_bounded_degree(&m, k, &alpha.witness).map_err(|e| e.to_string())?;
    Ok(json!({
        "k": k,
        "intervals": m.intervals(),
        "degrees": g.degrees(),
        "greedy": greedy.vertices,
        "oracle": alpha.witness,
        "swapped": swapped.vertices,
        "swaps": swapped.swaps,
    })
    .to_string())
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn extraction(family: &str, n: i32, k: usize, d: i32, s: i32, n0: i32, t: usize, dmax: i32, seed: u32) -> Result<String, JsError> {
    extraction_json(family, n, k, d, s, n0, t, dmax, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bounds(k: usize, t: usize, d: usize, n_max: usize) -> String {
    bounds_json(k, t, d, n_max)
}

#[wasm_bindgen]
pub fn intervals(n: usize, k: usize, seed: u32) -> Result<String, JsError> {
    interval_json(n, k, seed).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn figure_extraction() {
        let v = parse(&extraction_json("kset", -1, 3, 7, 3, -1, 3, 7, 0).unwrap());
        assert_eq!(v["n"], 21);
        assert_eq!(v["selected"].as_array().unwrap().len(), 12);
        assert!(extraction_json("nope", 5, 1, -1, -1, -1, 0, -1, 0).is_err());
        assert!(extraction_json("random-interval", 5, 1, -1, -1, -1, 0, -1, 0).is_err());
    }

    #[test]
    fn curves_cover_the_range() {
        let v = parse(&bounds_json(2, 1, 6, 30));
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows.first().unwrap()["n"], 5);
        assert_eq!(rows.last().unwrap()["n"], 30);
        assert!(rows.iter().all(|r| r["dtset_lower"].is_number()));
    }

    #[test]
    fn interval_sets_agree() {
        let v = parse(&interval_json(14, 2, 7).unwrap());
        let len = |key: &str| v[key].as_array().unwrap().len();
        assert_eq!(len("greedy"), len("oracle"));
        assert_eq!(len("swapped"), len("oracle"));
    }
}
