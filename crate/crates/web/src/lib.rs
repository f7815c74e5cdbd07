//! Browser bindings for the topo-index demo page.
//!
//! Each export takes a family description plus a transform and `k`, and
//! returns a JSON string. The functions are ordinary Rust on native
//! targets, so they are tested without a browser.

use std::f64::consts::TAU;

use serde_json::{json, Value};
use topo_index::report::{render_indices, IndexReport};
use topo_index::verify::DerivedCache;
use topo_index::{
    compute_all, generate, verify::verify_cached, Family, FormulaId, Graph, OutputFormat, Transform,
};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest derived graph the page will build or draw.
pub const MAX_DERIVED_VERTICES: usize = 400;

fn base_graph(
    family: &str,
    size: usize,
    size2: usize,
    seed: u64,
) -> Result<(String, Graph), String> {
    // size2 doubles as `b` for bipartite graphs and `r` for random regular ones
    let fam = Family::from_parts(
        family,
        Some(size),
        Some(size2),
        Some(size2),
        Some(0.5),
        seed,
    )
    .map_err(|e| e.to_string())?;
    let g = generate(&fam).map_err(|e| e.to_string())?;
    Ok((fam.to_string(), g))
}

fn derived(
    family: &str,
    size: usize,
    size2: usize,
    seed: u64,
    kind: &str,
    k: usize,
) -> Result<(String, Graph, Transform, Graph), String> {
    let (name, g) = base_graph(family, size, size2, seed)?;
    let t: Transform = kind.parse().map_err(|e: topo_index::Error| e.to_string())?;
    let n = t.vertex_count(g.n(), g.m(), k);
    if n > MAX_DERIVED_VERTICES {
        return Err(format!(
            "derived graph would have {n} vertices (limit {MAX_DERIVED_VERTICES})"
        ));
    }
    let d = t.apply(&g, k);
    Ok((name, g, t, d))
}

/// All seven indices of `S_k(G)` or `R_k(G)` as an index report.
#[wasm_bindgen]
pub fn derived_indices(
    family: &str,
    size: usize,
    size2: usize,
    seed: u64,
    kind: &str,
    k: usize,
) -> Result<String, String> {
    let (name, _, t, d) = derived(family, size, size2, seed, kind, k)?;
    let label = format!("{}({name}, k={k})", t.short());
    Ok(render_indices(
        &IndexReport::new(&label, &compute_all(&d)),
        OutputFormat::Json,
    ))
}

/// Vertex positions and edges of the derived graph, for drawing.
///
/// Original vertices sit on the unit circle. Subdivision vertices are
/// spaced along their edge; semi-total vertices fan out on both sides of
/// its midpoint.
#[wasm_bindgen]
pub fn derived_layout(
    family: &str,
    size: usize,
    size2: usize,
    seed: u64,
    kind: &str,
    k: usize,
) -> Result<String, String> {
    let (_, g, t, d) = derived(family, size, size2, seed, kind, k)?;
    let n = g.n();
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let a = TAU * i as f64 / n as f64 - TAU / 4.0;
            (a.cos(), a.sin())
        })
        .collect();
    for &(u, v) in g.edges() {
        let ((x0, y0), (x1, y1)) = (pos[u], pos[v]);
        let (dx, dy) = (x1 - x0, y1 - y0);
        let len = dx.hypot(dy).max(1e-9);
        for s in 0..k {
            pos.push(match t {
                Transform::SubdivisionK => {
                    let f = (s + 1) as f64 / (k + 1) as f64;
                    (x0 + f * dx, y0 + f * dy)
                }
                Transform::SemiTotalK => {
                    let side = if s % 2 == 0 { 1.0 } else { -1.0 };
                    let off = side * 0.12 * (s / 2 + 1) as f64;
                    (
                        x0 + dx / 2.0 - off * dy / len,
                        y0 + dy / 2.0 + off * dx / len,
                    )
                }
            });
        }
    }
    debug_assert_eq!(pos.len(), d.n());
    Ok(json!({
        "n": d.n(),
        "base_n": n,
        "positions": pos.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
        "edges": d.edges(),
    })
    .to_string())
}

/// Every closed form for the chosen transform, checked at this `k`.
#[wasm_bindgen]
pub fn check_formulas(
    family: &str,
    size: usize,
    size2: usize,
    seed: u64,
    kind: &str,
    k: usize,
) -> Result<String, String> {
    let (name, g, t, _) = derived(family, size, size2, seed, kind, k)?;
    let mut cache = DerivedCache::new(&g);
    let rows: Vec<Value> = FormulaId::all()
        .filter(|id| id.transform() == t)
        .map(
            |id| match verify_cached(&mut cache, id, &name, k as u32, false) {
                Ok(r) => json!({
                    "formula": id.to_string(),
                    "status": if r.matched { "match" } else { "mismatch" },
                    "predicted": r.predicted.to_string(),
                    "actual": r.actual.to_string(),
                    "residual": r.residual.to_string(),
                }),
                Err(skip) => json!({
                    "formula": id.to_string(),
                    "status": "skipped",
                    "reason": skip.reason,
                }),
            },
        )
        .collect();
    Ok(Value::Array(rows).to_string())
}
