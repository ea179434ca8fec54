//! JSON import/export for matrices and polynomials.
//!
//! Matrices serialize as `{"rows": r, "cols": c, "entries": [[row, col,
//! "num/den"], …]}` with entries sorted by `(row, col)`; polynomials as
//! `{"coeffs": ["num/den", …]}` lowest degree first. Scalars render via
//! their `Display` form (`"3"` or `"-1/2"`), and both forms parse back.

use serde_json::{json, Value};

use crate::matrix::LinearMap;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::space::BasisSpace;

#[derive(Debug, thiserror::Error)]
#[error("malformed JSON payload: {0}")]
pub struct JsonFormatError(pub String);

pub fn matrix_to_json(m: &LinearMap) -> Value {
    let entries: Vec<Value> = m
        .sorted_entries()
        .into_iter()
        .map(|(r, c, s)| json!([r, c, s.to_string()]))
        .collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn matrix_from_json(value: &Value) -> Result<LinearMap, JsonFormatError> {
    let bad = |msg: &str| JsonFormatError(msg.to_string());
    let rows = value
        .get("rows")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing rows"))? as usize;
    let cols = value
        .get("cols")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("missing cols"))? as usize;
    let entries = value
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing entries"))?;
    let mut triplets = Vec::with_capacity(entries.len());
    for e in entries {
        let triple = e.as_array().filter(|a| a.len() == 3).ok_or_else(|| bad("entry is not a [row, col, scalar] triple"))?;
        let r = triple[0].as_u64().ok_or_else(|| bad("row is not an integer"))? as usize;
        let c = triple[1].as_u64().ok_or_else(|| bad("col is not an integer"))? as usize;
        let s: Scalar = triple[2]
            .as_str()
            .ok_or_else(|| bad("scalar is not a string"))?
            .parse()
            .map_err(|e| JsonFormatError(format!("{e}")))?;
        if r >= rows || c >= cols {
            return Err(bad("entry index out of range"));
        }
        triplets.push((r, c, s));
    }
    Ok(LinearMap::from_triplets(
        BasisSpace::opaque(cols),
        BasisSpace::opaque(rows),
        triplets,
    ))
}

pub fn polynomial_to_json(p: &Polynomial) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn polynomial_from_json(value: &Value) -> Result<Polynomial, JsonFormatError> {
    let coeffs = value
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonFormatError("missing coeffs".into()))?;
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let s: Scalar = c
            .as_str()
            .ok_or_else(|| JsonFormatError("coefficient is not a string".into()))?
            .parse()
            .map_err(|e| JsonFormatError(format!("{e}")))?;
        out.push(s);
    }
    Ok(Polynomial::from_coeffs(out))
}

/// Canonical compact rendering used wherever byte-identical output matters.
pub fn to_canonical_string(value: &Value) -> String {
    // serde_json with default features sorts object keys, so a plain
    // to_string is already canonical.
    serde_json::to_string(value).expect("JSON values serialize")
}
