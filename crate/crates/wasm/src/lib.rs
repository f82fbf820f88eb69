//! JSON-in, JSON-out bindings for the browser demo in `www/`.
//!
//! Each exported function has a plain Rust twin returning
//! `Result<serde_json::Value, String>`, which is what the native tests call.

use oddcolour::construct::{construct, Case};
use oddcolour::discharge::{charge_text, discharge, Charge};
use oddcolour::io::{parse_colouring, parse_graph, write_graph};
use oddcolour::verify;
use oddcolour::{generate, TorusParams};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn params(m: usize, n: usize, t: usize) -> Result<TorusParams, String> {
    TorusParams::new(m, n, t).map_err(|e| e.to_string())
}

/// Graph file text for `T(m, n, t)`.
pub fn torus_graph_text(m: usize, n: usize, t: usize) -> Result<String, String> {
    let g = generate(&params(m, n, t)?).map_err(|e| e.to_string())?;
    Ok(write_graph(&g))
}

/// The constructed colouring as a grid: `grid[i-1][j-1]` is the colour of `(i, j)`.
pub fn colour_torus_value(m: usize, n: usize, t: usize) -> Result<Value, String> {
    let p = params(m, n, t)?;
    let built = construct(&p).map_err(|e| e.to_string())?;
    let g = generate(&p).map_err(|e| e.to_string())?;
    let grid: Vec<Vec<u32>> =
        (1..=m).map(|i| (1..=n).map(|j| built.colouring.colour(p.index(i, j))).collect()).collect();
    let case = match &built.case {
        Case::Grid { m_mod, n_mod } => format!("m>=3 ({m_mod},{n_mod} mod 3)"),
        Case::TwoColumns => "m=2".to_string(),
        Case::OneColumn { canonical_t, .. } => format!("m=1 (shift {canonical_t})"),
    };
    let recoloured: Vec<Value> =
        built.recoloured.iter().map(|r| json!({ "i": r.at.0, "j": r.at.1, "from": r.from, "to": r.to })).collect();
    Ok(json!({
        "params": p.to_string(),
        "case": case,
        "grid": grid,
        "recoloured": recoloured,
        "nice": verify::is_nice(&g, &built.colouring).expect("total"),
        "colours": built.colouring.colour_count(),
    }))
}

/// Verdicts for a colouring file against a graph file.
pub fn verify_value(graph: &str, colouring: &str) -> Result<Value, String> {
    let g = parse_graph(graph).map_err(|e| format!("graph: {e}"))?;
    let c = parse_colouring(colouring, g.vertex_count()).map_err(|e| format!("colouring: {e}"))?;
    let r = verify::report(&g, &c).expect("parser checked totality");
    let verdict = |v: Option<verify::Violation>| match v {
        None => json!({ "ok": true }),
        Some(v) => json!({ "ok": false, "witness": v.to_string() }),
    };
    Ok(json!({
        "proper": verdict(r.proper),
        "odd": verdict(r.odd),
        "conflict_free": verdict(r.conflict_free),
        "nice": verdict(r.nice),
        "colours": r.colour_count,
    }))
}

/// Discharging audit of a graph file, with charges as `p/q` strings.
pub fn discharge_value(graph: &str) -> Result<Value, String> {
    let g = parse_graph(graph).map_err(|e| format!("graph: {e}"))?;
    let (before, after, audit) = discharge(&g).map_err(|e| e.to_string())?;
    let listed = |items: &[(usize, Charge)]| -> Vec<Value> {
        items.iter().map(|(x, c)| json!([x + 1, charge_text(c)])).collect()
    };
    Ok(json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "faces": before.faces().len(),
        "total_before": charge_text(&audit.total_before),
        "total_after": charge_text(&audit.total_after),
        "conserved": audit.conserved,
        "transfers": after.transfers.len(),
        "negative_faces": listed(&audit.negative_faces),
        "negative_large_vertices": listed(&audit.negative_large_vertices),
        "nonpositive_five_vertices": listed(&audit.nonpositive_five_vertices),
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = colourTorus)]
pub fn colour_torus(m: usize, n: usize, t: usize) -> Result<String, JsValue> {
    to_js(colour_torus_value(m, n, t))
}

#[wasm_bindgen(js_name = torusGraph)]
pub fn torus_graph(m: usize, n: usize, t: usize) -> Result<String, JsValue> {
    torus_graph_text(m, n, t).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = verifyColouring)]
pub fn verify_colouring(graph: &str, colouring: &str) -> Result<String, JsValue> {
    to_js(verify_value(graph, colouring))
}

#[wasm_bindgen(js_name = dischargeAudit)]
pub fn discharge_audit(graph: &str) -> Result<String, JsValue> {
    to_js(discharge_value(graph))
}
