//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON report. The `*_report`
//! functions hold the logic and run natively, so they are tested without a
//! wasm toolchain.

use hyperdet::degree::{classify, slice_degree};
use hyperdet::methods::{compute_det, MethodChoice};
use hyperdet::pencil::{kac_blocks, kronecker_blocks, BlockKind};
use hyperdet::polyalg::format_rational;
use hyperdet::{Format, MultiMatrix};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn parse_list(src: &str) -> Result<Vec<u64>, String> {
    src.split(|c: char| c == ',' || c == 'x' || c == '×' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u64>().map_err(|_| format!("not a non-negative integer: {s:?}")))
        .collect()
}

/// Degree data for a format such as `"3x2x2"` or `"3 2 2"`.
pub fn degree_report(dims: &str) -> Result<String, String> {
    let dims: Vec<usize> = parse_list(dims)?.into_iter().map(|d| d as usize).collect();
    let format = Format::new(dims).map_err(|e| e.to_string())?;
    let class = classify(&format).map_err(|e| e.to_string())?;
    let slices: Vec<u64> = if class.exists {
        (0..format.order()).map(|i| slice_degree(&format, i)).collect::<Result<_, _>>().map_err(|e| e.to_string())?
    } else {
        Vec::new()
    };
    Ok(json!({
        "format": format.to_string(),
        "exists": class.exists,
        "boundary": class.boundary,
        "N": class.degree,
        "slice_degrees": slices,
    })
    .to_string())
}

/// Det of a tensor document, running every applicable method.
pub fn det_report(document: &str) -> Result<String, String> {
    let a = MultiMatrix::from_json(document).map_err(|e| e.to_string())?;
    let report = compute_det(&a, MethodChoice::Auto).map_err(|e| e.to_string())?;
    let runs: Vec<_> = report
        .runs
        .iter()
        .map(|r| json!({"method": r.method.name(), "raw": format_rational(&r.raw), "value": format_rational(&r.value)}))
        .collect();
    Ok(json!({
        "format": a.format().to_string(),
        "value": format_rational(&report.value),
        "methods": runs,
    })
    .to_string())
}

/// Block parameters: `kind` is `"kronecker"` with `"b c"` or `"kac"` with `"w s t"`.
pub fn blocks_report(kind: &str, args: &str) -> Result<String, String> {
    let v = parse_list(args)?;
    let d = match (kind, v.as_slice()) {
        ("kronecker", &[b, c]) => kronecker_blocks(b, c),
        ("kac", &[w, s, t]) => kac_blocks(w, s, t),
        ("kronecker", _) => return Err("kronecker needs two numbers b c".into()),
        ("kac", _) => return Err("kac needs three numbers w s t".into()),
        _ => return Err(format!("unknown block kind {kind:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(json!({
        "kind": if d.kind == BlockKind::Kronecker { "kronecker" } else { "kac" },
        "n": d.n,
        "m": d.m,
        "param": d.param,
        "blocks": d.blocks,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn degree(dims: &str) -> Result<String, JsValue> {
    degree_report(dims).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn det(document: &str) -> Result<String, JsValue> {
    det_report(document).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn blocks(kind: &str, args: &str) -> Result<String, JsValue> {
    blocks_report(kind, args).map_err(|e| JsValue::from_str(&e))
}
