//! JSON export/import of matched pairs.
//!
//! Shape: `{"X": <group JSON>, "G": [parent indices], "M": [parent
//! indices], "act_left": [[int]], "act_right": [[int]]}` with action rows
//! indexed by M-local index and columns by G-local index.

use serde_json::{json, Value};

use groups::{group_from_json, group_to_json, Subgroup};

use crate::matched_pair::MatchedPair;

#[derive(Debug, thiserror::Error)]
#[error("malformed matched-pair JSON: {0}")]
pub struct MatchedPairJsonError(String);

pub fn matched_pair_to_json(mp: &MatchedPair) -> Value {
    json!({
        "X": group_to_json(mp.x()),
        "G": mp.g().elements(),
        "M": mp.m().elements(),
        "act_left": mp.act_left_table(),
        "act_right": mp.act_right_table(),
    })
}

pub fn matched_pair_from_json(value: &Value) -> Result<MatchedPair, MatchedPairJsonError> {
    let bad = |msg: &str| MatchedPairJsonError(msg.to_string());
    let group_value = value.get("X").ok_or_else(|| bad("missing X"))?;
    let x = group_from_json(&group_value.to_string())
        .map_err(|e| MatchedPairJsonError(format!("bad group: {e}")))?;
    let indices = |key: &str| -> Result<Vec<usize>, MatchedPairJsonError> {
        value
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing subgroup indices"))?
            .iter()
            .map(|v| v.as_u64().map(|n| n as usize).ok_or_else(|| bad("non-integer index")))
            .collect()
    };
    let g = Subgroup::new(x.clone(), indices("G")?).ok_or_else(|| bad("G is not a subgroup"))?;
    let m = Subgroup::new(x.clone(), indices("M")?).ok_or_else(|| bad("M is not a subgroup"))?;
    let table = |key: &str| -> Result<Vec<Vec<usize>>, MatchedPairJsonError> {
        value
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing action table"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("table row is not an array"))?
                    .iter()
                    .map(|v| {
                        v.as_u64().map(|n| n as usize).ok_or_else(|| bad("non-integer table entry"))
                    })
                    .collect()
            })
            .collect()
    };
    MatchedPair::from_tables(&x, &g, &m, table("act_left")?, table("act_right")?)
        .map_err(|e| MatchedPairJsonError(format!("{e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::exact_factorizations;
    use crate::matched_pair::{derive_matched_pair, verify_matched_pair};
    use groups::builtin_group;

    #[test]
    fn round_trip_preserves_tables() {
        let x = builtin_group("sym:3").unwrap();
        let (g, m) = exact_factorizations(&x)
            .into_iter()
            .find(|(g, m)| g.order() == 3 && m.order() == 2)
            .unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        let value = matched_pair_to_json(&mp);
        let back = matched_pair_from_json(&value).unwrap();
        assert_eq!(back.act_left_table(), mp.act_left_table());
        assert_eq!(back.act_right_table(), mp.act_right_table());
        assert_eq!(back.g().elements(), mp.g().elements());
        verify_matched_pair(&back).expect_all_passed("round-tripped pair");
    }

    #[test]
    fn malformed_documents_are_rejected() {
        for text in [
            r#"{}"#,
            r#"{"X": {"name": "z", "order": 1, "cayley": [[0]]}, "G": [0], "M": [1]}"#,
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            assert!(matched_pair_from_json(&v).is_err());
        }
    }
}
