//! The core [`FiniteGroup`] type and its JSON form.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while constructing or validating a group.
#[derive(Debug, Error)]
pub enum GroupError {
    /// Generator closure grew past the configured cap.
    #[error("group closure exceeded the order cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    /// A supplied image table is not a permutation of `0..degree`.
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    /// Explicit Cayley data violates one of the group axioms.
    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),
    /// A JSON document did not match either accepted group schema.
    #[error("unreadable group JSON: {0}")]
    BadJson(String),
}

/// A finite group on elements `0..order` with `0` as the identity.
///
/// The full multiplication table is stored row-major: `mul(i, j)` is the
/// product of `i` (left) and `j` (right). All four axioms — identity row and
/// column, two-sided inverses, associativity, and the Latin-square property —
/// are established at construction time.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    cayley: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit Cayley table and validates every axiom.
    ///
    /// Associativity is checked exhaustively for orders up to 200 (cubic cost);
    /// for larger tables a fixed deterministic sample of triples is used, which
    /// suffices for the intended desk-scale inputs.
    pub fn from_cayley(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Arc<Self>, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidCayley("empty table".into()));
        }
        let mut cayley = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidCayley(format!(
                    "row {i} has length {} but the table has {n} rows",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::InvalidCayley(format!(
                        "entry {v} in row {i} is out of range for order {n}"
                    )));
                }
                cayley.push(v as u32);
            }
        }
        Self::from_flat(name.into(), n, cayley)
    }

    pub(crate) fn from_flat(name: String, n: usize, cayley: Vec<u32>) -> Result<Arc<Self>, GroupError> {
        let at = |i: usize, j: usize| cayley[i * n + j] as usize;
        for i in 0..n {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::InvalidCayley(format!(
                    "index 0 is not a two-sided identity at element {i}"
                )));
            }
        }
        // Latin-square property: every row and column is a permutation.
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for i in 0..n {
            seen_row.iter_mut().for_each(|s| *s = false);
            seen_col.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let r = at(i, j);
                let c = at(j, i);
                if seen_row[r] {
                    return Err(GroupError::InvalidCayley(format!("row {i} repeats element {r}")));
                }
                if seen_col[c] {
                    return Err(GroupError::InvalidCayley(format!("column {i} repeats element {c}")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let mut inv = vec![u32::MAX; n];
        for i in 0..n {
            let mut found = None;
            for j in 0..n {
                if at(i, j) == 0 && at(j, i) == 0 {
                    found = Some(j);
                    break;
                }
            }
            match found {
                Some(j) => inv[i] = j as u32,
                None => {
                    return Err(GroupError::InvalidCayley(format!("element {i} has no two-sided inverse")))
                }
            }
        }
        let group = FiniteGroup { name, order: n, cayley, inv };
        if n <= 200 {
            group.check_associativity_exhaustive()?;
        } else {
            group.check_associativity_sampled()?;
        }
        Ok(Arc::new(group))
    }

    fn check_associativity_exhaustive(&self) -> Result<(), GroupError> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Err(GroupError::InvalidCayley(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_associativity_sampled(&self) -> Result<(), GroupError> {
        let n = self.order as u64;
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..1_000_000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = ((state >> 40) % n) as usize;
            let j = ((state >> 20) % n) as usize;
            let k = (state % n) as usize;
            if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                return Err(GroupError::InvalidCayley(format!(
                    "associativity fails at ({i}, {j}, {k})"
                )));
            }
        }
        Ok(())
    }

    /// Group name used in reports and JSON exports.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element index (always 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// Product of `i` (left factor) and `j` (right factor).
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order + j] as usize
    }

    /// Inverse of element `i`.
    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i] as usize
    }

    /// Conjugate `y^{-1} x y`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != 0 {
            acc = self.mul(acc, i);
            k += 1;
        }
        k
    }

    /// Sorted list of `(element order, multiplicity)` pairs; an isomorphism
    /// invariant used for search pruning.
    pub fn order_profile(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for i in 0..self.order {
            *counts.entry(self.element_order(i)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }

    /// True when every pair of elements commutes.
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Re-checks all four Cayley-table axioms exhaustively. Intended for
    /// tests and for auditing externally supplied tables.
    pub fn verify_invariants(&self) -> Result<(), GroupError> {
        let clone = FiniteGroup {
            name: self.name.clone(),
            order: self.order,
            cayley: self.cayley.clone(),
            inv: Vec::new(),
        };
        // from_flat re-derives inverses and re-validates everything.
        let rebuilt = Self::from_flat(clone.name.clone(), clone.order, clone.cayley)?;
        if rebuilt.inv != self.inv {
            return Err(GroupError::InvalidCayley("stored inverse table is inconsistent".into()));
        }
        self.check_associativity_exhaustive()
    }

    /// The Cayley table as nested rows (row = left factor).
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.mul(i, j)).collect())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// JSON interchange
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum GroupJson {
    Cayley {
        name: String,
        order: usize,
        cayley: Vec<Vec<usize>>,
    },
    Generators {
        name: String,
        degree: usize,
        permutation_generators: Vec<Vec<usize>>,
    },
}

/// Serializes a group in the Cayley-table JSON form.
pub fn group_to_json(group: &FiniteGroup) -> serde_json::Value {
    serde_json::json!({
        "name": group.name(),
        "order": group.order(),
        "cayley": group.cayley_rows(),
    })
}

/// Reads a group from JSON, accepting either the Cayley-table form
/// `{"name", "order", "cayley"}` or the generator form
/// `{"name", "degree", "permutation_generators"}`.
pub fn group_from_json(text: &str) -> Result<Arc<FiniteGroup>, GroupError> {
    let parsed: GroupJson =
        serde_json::from_str(text).map_err(|e| GroupError::BadJson(e.to_string()))?;
    match parsed {
        GroupJson::Cayley { name, order, cayley } => {
            if cayley.len() != order {
                return Err(GroupError::BadJson(format!(
                    "declared order {order} does not match {} table rows",
                    cayley.len()
                )));
            }
            FiniteGroup::from_cayley(name, cayley)
        }
        GroupJson::Generators { name, degree, permutation_generators } => {
            let group = crate::generate::group_from_generators(degree, &permutation_generators)?;
            // Re-wrap with the declared name.
            FiniteGroup::from_flat(name, group.order(), group.cayley.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_identity_at_zero() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_cayley("bad", rows),
            Err(GroupError::InvalidCayley(_))
        ));
    }

    #[test]
    fn z2_roundtrips_through_json() {
        let g = FiniteGroup::from_cayley("z2", vec![vec![0, 1], vec![1, 0]]).unwrap();
        let text = group_to_json(&g).to_string();
        let back = group_from_json(&text).unwrap();
        assert_eq!(back.order(), 2);
        assert_eq!(back.mul(1, 1), 0);
        assert_eq!(back.name(), "z2");
    }

    #[test]
    fn generator_json_form_is_accepted() {
        let text = r#"{"name":"z3","degree":3,"permutation_generators":[[1,2,0]]}"#;
        let g = group_from_json(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.name(), "z3");
    }

    #[test]
    fn order_profile_distinguishes_z4_from_klein() {
        let z4 = crate::builtin_group("cyclic:4").unwrap();
        let klein = crate::builtin_group("product:cyclic:2,cyclic:2").unwrap();
        assert_ne!(z4.order_profile(), klein.order_profile());
    }
}
