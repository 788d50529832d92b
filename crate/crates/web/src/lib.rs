//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes and returns strings. The `*_json` functions hold the
//! logic and are plain Rust, so they run in native tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use compedge::experiments::{threshold_sweep, to_csv};
use compedge::homology::ORACLE_LIMIT;
use compedge::invariants::{cross_validate, huneke_ulrich_check, implication_suite, is_licci, predict_invariants};
use compedge::{hochster_betti, parse_graph, FieldTag, SimpleGraph, SquarefreeIdeal};

/// Upper bound on `trials * C(n, 2)` per sweep row, to keep the page
/// responsive.
pub const SWEEP_PAIR_BUDGET: u64 = 50_000_000;
pub const SWEEP_MAX_ROWS: usize = 64;

fn graph(text: &str) -> Result<SimpleGraph, String> {
    parse_graph(text).map_err(|e| e.to_string())
}

/// Verdict, predicted and oracle invariants, Betti table and the
/// implication suite for one graph.
pub fn analyze_json(graph_text: &str, field: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    let field: FieldTag = field.parse().map_err(|e: String| e)?;
    if g.n() > ORACLE_LIMIT {
        return Err(format!("at most {ORACLE_LIMIT} vertices, got {}", g.n()));
    }
    let err = |e: compedge::InvariantError| e.to_string();
    let report = predict_invariants(&g).map_err(err)?;
    let verdict = is_licci(&g).map_err(err)?;
    let ideal = SquarefreeIdeal::complementary_edge_ideal(&g).map_err(|e| e.to_string())?;
    let betti = hochster_betti(&ideal, field).map_err(|e| e.to_string())?;
    let check = cross_validate(&g, field).map_err(err)?;
    let suite = implication_suite(&g, field).map_err(err)?;
    let o = check.oracle;
    let out = json!({
        "graph": g,
        "ideal": ideal.to_string(),
        "report": report,
        "licci_reason": verdict.reason,
        "oracle": o,
        "huneke_ulrich": huneke_ulrich_check(o.reg_quotient, o.height, o.indeg),
        "mismatches": check.mismatches,
        "implications": suite,
        "betti": {
            "grid": betti.grid(),
            "totals": betti.totals(),
            "text": betti.to_string(),
        },
    });
    Ok(out.to_string())
}

/// Licci fraction of `G(n, c/n)` for each `c` in a comma-separated list.
pub fn sweep_json(n: usize, c_values: &str, trials: u32, seed: u64) -> Result<String, String> {
    let cs = c_values
        .split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("not a number: {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if cs.len() > SWEEP_MAX_ROWS {
        return Err(format!("at most {SWEEP_MAX_ROWS} values of c"));
    }
    let pairs = (n as u64).saturating_mul(n.saturating_sub(1) as u64) / 2;
    if pairs.saturating_mul(trials as u64) > SWEEP_PAIR_BUDGET {
        return Err(format!("trials * C(n, 2) must stay below {SWEEP_PAIR_BUDGET}"));
    }
    let sweep = threshold_sweep(n, &cs, trials as u64, seed).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = sweep
        .rows
        .iter()
        .map(|r| {
            json!({
                "c": r.config.c(),
                "p": r.config.p(),
                "seed": r.config.seed,
                "licci_count": r.licci_count,
                "trials": r.config.trials,
                "fraction_licci": r.fraction_licci(),
            })
        })
        .collect();
    Ok(json!({
        "rows": rows,
        "trend_violations": sweep.trend_violations,
        "csv": to_csv(&sweep.rows),
    })
    .to_string())
}

/// Maximum subgraph density `m(G)` as `p/q`.
pub fn max_density_text(graph_text: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    g.max_subgraph_density().map(|d| d.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn analyze(graph_text: &str, field: &str) -> Result<String, JsError> {
    analyze_json(graph_text, field).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn sweep(n: usize, c_values: &str, trials: u32, seed: u64) -> Result<String, JsError> {
    sweep_json(n, c_values, trials, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = maxDensity)]
pub fn max_density(graph_text: &str) -> Result<String, JsError> {
    max_density_text(graph_text).map_err(|e| JsError::new(&e))
}
