//! JSON serialization for Hopf structure constants.
//!
//! Schema: `{"dim": d, "basis": [label strings], "product": [[i,j,k,"c"]],
//! "coproduct": [[i,j,k,"c"]], "unit": ["c"... dense], "counit": [...],
//! "antipode": [[row,col,"c"]], "star": [[row,col,"c"]] (optional)}`.
//! Entry lists are emitted in canonical sorted order, so equal algebras
//! serialize to equal JSON. Labels are for display; imported algebras get
//! opaque labels back.

use std::str::FromStr;
use std::sync::Arc;

use exactalg::{AlgebraElement, BasisSpace, LinearMap, Scalar};
use serde_json::{json, Value};

use crate::data::HopfAlgebraData;
use crate::table::{CoproductTable, ProductTable};

#[derive(Debug, thiserror::Error)]
pub enum HopfJsonError {
    #[error("malformed hopf json: {0}")]
    Malformed(String),
    #[error("unreadable hopf json: {0}")]
    Unreadable(#[from] serde_json::Error),
}

pub fn hopf_to_json(h: &HopfAlgebraData) -> Value {
    let triples = |entries: &mut dyn Iterator<Item = (usize, usize, usize, Scalar)>| -> Value {
        Value::Array(
            entries
                .map(|(i, j, k, c)| json!([i, j, k, c.to_string()]))
                .collect(),
        )
    };
    let matrix = |m: &LinearMap| -> Value {
        Value::Array(
            m.sorted_entries()
                .into_iter()
                .map(|(r, c, s)| json!([r, c, s.to_string()]))
                .collect(),
        )
    };
    let dense = |coords: &dyn Fn(usize) -> Scalar| -> Value {
        Value::Array((0..h.dim()).map(|i| Value::String(coords(i).to_string())).collect())
    };
    let mut out = json!({
        "dim": h.dim(),
        "basis": (0..h.dim()).map(|i| h.space.label(i).to_string()).collect::<Vec<_>>(),
        "product": triples(&mut h.product.entries()),
        "coproduct": triples(&mut h.coproduct.entries()),
        "unit": dense(&|i| h.unit.coeff(i)),
        "counit": dense(&|i| h.counit[i]),
        "antipode": matrix(&h.antipode),
    });
    if let Some(st) = &h.star {
        out["star"] = matrix(st);
    }
    out
}

pub fn hopf_from_json(text: &str) -> Result<HopfAlgebraData, HopfJsonError> {
    let value: Value = serde_json::from_str(text)?;
    let dim = value
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("missing or non-integer dim"))? as usize;
    let space = BasisSpace::opaque(dim);

    let product = ProductTable::from_entries(dim, read_triples(&value, "product", dim)?);
    let coproduct = CoproductTable::from_entries(dim, read_triples(&value, "coproduct", dim)?);
    let unit_coords = read_dense(&value, "unit", dim)?;
    let unit = AlgebraElement::from_terms(
        Arc::clone(&space),
        unit_coords.into_iter().enumerate().map(|(i, c)| (i, c)),
    );
    let counit = read_dense(&value, "counit", dim)?;
    let antipode = read_matrix(&value, "antipode", dim, &space)?
        .ok_or_else(|| malformed("missing antipode"))?;
    let star = read_matrix(&value, "star", dim, &space)?;
    Ok(HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, star))
}

fn malformed(msg: impl Into<String>) -> HopfJsonError {
    HopfJsonError::Malformed(msg.into())
}

fn read_scalar(v: &Value, context: &str) -> Result<Scalar, HopfJsonError> {
    let text = v
        .as_str()
        .ok_or_else(|| malformed(format!("{context}: coefficient must be a string")))?;
    Scalar::from_str(text).map_err(|e| malformed(format!("{context}: {e}")))
}

fn read_triples(
    value: &Value,
    key: &str,
    dim: usize,
) -> Result<Vec<(usize, usize, usize, Scalar)>, HopfJsonError> {
    let rows = value
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(format!("missing {key} array")))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let items = row
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| malformed(format!("{key}: each entry is [i, j, k, coeff]")))?;
        let mut idx = [0usize; 3];
        for (slot, item) in idx.iter_mut().zip(&items[..3]) {
            let n = item
                .as_u64()
                .ok_or_else(|| malformed(format!("{key}: indices must be integers")))?;
            if n as usize >= dim {
                return Err(malformed(format!("{key}: index {n} out of range for dim {dim}")));
            }
            *slot = n as usize;
        }
        out.push((idx[0], idx[1], idx[2], read_scalar(&items[3], key)?));
    }
    Ok(out)
}

fn read_dense(value: &Value, key: &str, dim: usize) -> Result<Vec<Scalar>, HopfJsonError> {
    let items = value
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| malformed(format!("missing {key} array")))?;
    if items.len() != dim {
        return Err(malformed(format!("{key}: expected {dim} coordinates, found {}", items.len())));
    }
    items.iter().map(|v| read_scalar(v, key)).collect()
}

fn read_matrix(
    value: &Value,
    key: &str,
    dim: usize,
    space: &Arc<BasisSpace>,
) -> Result<Option<LinearMap>, HopfJsonError> {
    let Some(rows) = value.get(key) else {
        return Ok(None);
    };
    let rows =
        rows.as_array().ok_or_else(|| malformed(format!("{key} must be an entry array")))?;
    let mut triplets = Vec::with_capacity(rows.len());
    for row in rows {
        let items = row
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| malformed(format!("{key}: each entry is [row, col, coeff]")))?;
        let r = items[0]
            .as_u64()
            .ok_or_else(|| malformed(format!("{key}: indices must be integers")))?
            as usize;
        let c = items[1]
            .as_u64()
            .ok_or_else(|| malformed(format!("{key}: indices must be integers")))?
            as usize;
        if r >= dim || c >= dim {
            return Err(malformed(format!("{key}: entry ({r}, {c}) out of range for dim {dim}")));
        }
        triplets.push((r, c, read_scalar(&items[2], key)?));
    }
    Ok(Some(LinearMap::from_triplets(Arc::clone(space), Arc::clone(space), triplets)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::structure_diff;
    use crate::group_algebras::{function_hopf, group_hopf};
    use exactalg::to_canonical_string;
    use groups::builtin_group;

    #[test]
    fn round_trip_preserves_every_structure_constant() {
        for h in [
            group_hopf(&builtin_group("sym:3").unwrap()),
            function_hopf(&builtin_group("dihedral:4").unwrap()),
        ] {
            let text = to_canonical_string(&hopf_to_json(&h));
            let back = hopf_from_json(&text).unwrap();
            assert_eq!(structure_diff(&h, &back), None);
            // Serialization is canonical, so a second trip is byte-equal.
            assert_eq!(to_canonical_string(&hopf_to_json(&back)), text);
        }
    }

    #[test]
    fn malformed_documents_are_rejected_with_context() {
        let err = hopf_from_json("{\"dim\": 2}").unwrap_err();
        assert!(err.to_string().contains("product"));
        let err = hopf_from_json(
            "{\"dim\": 1, \"product\": [[0,0,5,\"1\"]], \"coproduct\": [], \
             \"unit\": [\"1\"], \"counit\": [\"1\"], \"antipode\": []}",
        )
        .unwrap_err();
        assert!(err.to_string().contains("out of range"));
        assert!(hopf_from_json("not json at all").is_err());
    }

    #[test]
    fn a_missing_star_stays_missing() {
        let mut h = group_hopf(&builtin_group("cyclic:2").unwrap());
        h.star = None;
        let text = hopf_to_json(&h).to_string();
        assert!(!text.contains("star"));
        assert!(hopf_from_json(&text).unwrap().star.is_none());
    }
}
