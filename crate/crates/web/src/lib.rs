//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export returns a JSON string; errors surface as thrown strings.

use hullmass::code::{self, LinearCode};
use hullmass::formulas::{self, CountQuery};
use hullmass::matrix::InnerProduct;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn inner_from(name: &str) -> Result<InnerProduct, String> {
    match name {
        "hermitian" => Ok(InnerProduct::Hermitian),
        "symplectic" => Ok(InnerProduct::Symplectic),
        other => Err(format!("unknown inner product {other:?}")),
    }
}

/// Counts for every `(k, ℓ)` at one length, with the total per `k`.
pub fn mass_table_json(inner: &str, q: u64, n: u32) -> Result<String, String> {
    let inner = inner_from(inner)?;
    let length = CountQuery::new(inner, q, n, 0, 0).length();
    if length > 64 {
        return Err(format!(
            "length {length} is too large for the table (max 64)"
        ));
    }
    let mut rows = Vec::new();
    for k in 0..=length {
        let query = CountQuery::new(inner, q, n, k, 0);
        let counts = (0..=k)
            .map(|ell| {
                formulas::hull_mass(&CountQuery { ell, ..query })
                    .map(|r| r.count.to_string())
                    .map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(json!({
            "k": k,
            "counts": counts,
            "total": formulas::total_codes(&query).to_string(),
        }));
    }
    Ok(json!({ "length": length, "field_order": q.pow(match inner {
        InnerProduct::Hermitian => 2,
        InnerProduct::Symplectic => 1,
    }), "rows": rows })
    .to_string())
}

/// Finite ratios at growing size next to the limiting density.
pub fn convergence_json(inner: &str, q: u64, ell: u32, max_n: u32) -> Result<String, String> {
    let inner = inner_from(inner)?;
    let limit = formulas::limit_density(inner, q, ell, 1e-12).map_err(|e| e.to_string())?;
    let mut points = Vec::new();
    for n in 1..=max_n.min(200) {
        let length = CountQuery::new(inner, q, n, 0, 0).length();
        let mut k = length / 2;
        if inner == InnerProduct::Symplectic && (k + ell) % 2 == 1 {
            k += 1;
        }
        if k > length {
            continue;
        }
        let ratio = formulas::finite_ratio(&CountQuery::new(inner, q, n, k, ell))
            .map_err(|e| e.to_string())?;
        points.push(json!({ "n": n, "length": length, "k": k, "ratio": ratio }));
    }
    Ok(
        json!({ "limit": limit.to_f64(), "limit_decimal": limit.to_decimal(15), "points": points })
            .to_string(),
    )
}

/// Hull data for a generator matrix in the CLI's file format.
pub fn analyze_json(text: &str) -> Result<String, String> {
    let c = hullmass::cli::parse_code(text, None).map_err(|e| e.to_string())?;
    let mut hulls = serde_json::Map::new();
    for inner in [InnerProduct::Hermitian, InnerProduct::Symplectic] {
        if let Some(v) = hull_entry(&c, inner) {
            hulls.insert(inner.to_string(), v);
        }
    }
    Ok(json!({
        "field_order": c.field().order(),
        "length": c.length(),
        "dimension": c.dimension(),
        "generator": c.generator().row_vecs(),
        "hulls": hulls,
    })
    .to_string())
}

fn hull_entry(c: &LinearCode, inner: InnerProduct) -> Option<Value> {
    let h = code::hull(c, inner).ok()?;
    Some(json!({
        "dimension": h.dimension,
        "basis": h.basis.row_vecs(),
        "lcd": h.dimension == 0,
        "self_orthogonal": h.dimension == c.dimension(),
    }))
}

#[wasm_bindgen]
pub fn mass_table(inner: &str, q: u32, n: u32) -> Result<String, JsValue> {
    mass_table_json(inner, q as u64, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn convergence(inner: &str, q: u32, ell: u32, max_n: u32) -> Result<String, JsValue> {
    convergence_json(inner, q as u64, ell, max_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    analyze_json(text).map_err(|e| JsValue::from_str(&e))
}
