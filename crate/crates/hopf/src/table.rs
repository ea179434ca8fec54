//! Sparse structure-constant tables: binary products and coproducts.

use std::collections::BTreeMap;

use exactalg::Scalar;

/// A sparse multiplication table over a fixed basis: `(i, j)` maps to the
/// expansion of `e_i · e_j` as a sorted sparse vector.
///
/// Rows (fixed left factor) are stored contiguously with their nonzero
/// columns in ascending order, so a verifier can walk the columns of one
/// left factor in a sorted merge against another sorted index list without
/// per-pair binary searches. A transposed adjacency (`col_rows`) supports
/// the symmetric walk over left factors for a fixed right factor.
#[derive(Clone, PartialEq, Eq)]
pub struct ProductTable {
    dim: usize,
    row_start: Vec<usize>,
    cols: Vec<u32>,
    vals: Vec<Vec<(u32, Scalar)>>,
    col_rows: Vec<Vec<u32>>,
}

impl ProductTable {
    /// Builds a table from `(left, right, result, coefficient)` entries.
    /// Repeats accumulate exactly; terms that cancel to zero are dropped.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> ProductTable {
        let mut acc: BTreeMap<(u32, u32), BTreeMap<u32, Scalar>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            assert!(i < dim && j < dim && k < dim, "product entry out of range");
            if c.is_zero() {
                continue;
            }
            let cell = acc.entry((i as u32, j as u32)).or_default();
            let slot = cell.entry(k as u32).or_insert(Scalar::ZERO);
            *slot += c;
            if slot.is_zero() {
                cell.remove(&(k as u32));
            }
        }
        let mut row_start = vec![0usize; dim + 1];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        let mut col_rows = vec![Vec::new(); dim];
        for ((i, j), cell) in acc {
            if cell.is_empty() {
                continue;
            }
            row_start[i as usize + 1] += 1;
            cols.push(j);
            vals.push(cell.into_iter().collect::<Vec<_>>());
            col_rows[j as usize].push(i);
        }
        for r in 0..dim {
            row_start[r + 1] += row_start[r];
        }
        ProductTable { dim, row_start, cols, vals, col_rows }
    }

    /// Builds a table by evaluating `f` on every index pair. Quadratic in
    /// the dimension; intended for small algebras and dense products.
    pub fn from_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> ProductTable {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in f(i, j) {
                    entries.push((i, j, k, c));
                }
            }
        }
        ProductTable::from_entries(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of index pairs with a nonzero product.
    pub fn support_len(&self) -> usize {
        self.cols.len()
    }

    /// The expansion of `e_i · e_j`; empty when the product vanishes.
    pub fn product(&self, i: usize, j: usize) -> &[(u32, Scalar)] {
        let row = &self.cols[self.row_start[i]..self.row_start[i + 1]];
        match row.binary_search(&(j as u32)) {
            Ok(pos) => &self.vals[self.row_start[i] + pos],
            Err(_) => &[],
        }
    }

    /// Ascending right factors `j` with `e_i · e_j ≠ 0`.
    pub fn row_cols(&self, i: usize) -> &[u32] {
        &self.cols[self.row_start[i]..self.row_start[i + 1]]
    }

    /// The products of row `i`, parallel to [`ProductTable::row_cols`].
    pub fn row_vals(&self, i: usize) -> &[Vec<(u32, Scalar)>] {
        &self.vals[self.row_start[i]..self.row_start[i + 1]]
    }

    /// Ascending left factors `i` with `e_i · e_j ≠ 0`.
    pub fn col_rows(&self, j: usize) -> &[u32] {
        &self.col_rows[j]
    }

    /// All entries as `(left, right, result, coefficient)`, sorted by
    /// `(left, right, result)` — the canonical serialization order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, Scalar)> + '_ {
        (0..self.dim).flat_map(move |i| {
            self.row_cols(i).iter().zip(self.row_vals(i)).flat_map(move |(&j, val)| {
                val.iter().map(move |&(k, c)| (i, j as usize, k as usize, c))
            })
        })
    }

    /// True when every nonzero product is a single basis vector with
    /// coefficient one, as for all the group-derived algebras here.
    pub fn is_monomial(&self) -> bool {
        self.vals.iter().all(|v| matches!(v.as_slice(), [(_, c)] if c.is_one()))
    }
}

/// A sparse coproduct table: basis index `i` maps to the expansion of
/// `Δe_i` in the tensor square, sorted by `(first leg, second leg)`.
/// Consecutive runs sharing a first leg are indexed up front (`groups`), so
/// compatibility checks can join coproduct legs against product rows by a
/// sorted merge.
#[derive(Clone, PartialEq, Eq)]
pub struct CoproductTable {
    dim: usize,
    rows: Vec<Vec<((u32, u32), Scalar)>>,
    groups: Vec<Vec<(u32, u32, u32)>>,
}

impl CoproductTable {
    /// Builds a table from `(input, first leg, second leg, coefficient)`
    /// entries. Repeats accumulate exactly.
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> CoproductTable {
        let mut acc: Vec<BTreeMap<(u32, u32), Scalar>> = vec![BTreeMap::new(); dim];
        for (i, j, k, c) in entries {
            assert!(i < dim && j < dim && k < dim, "coproduct entry out of range");
            if c.is_zero() {
                continue;
            }
            let slot = acc[i].entry((j as u32, k as u32)).or_insert(Scalar::ZERO);
            *slot += c;
            if slot.is_zero() {
                acc[i].remove(&(j as u32, k as u32));
            }
        }
        let rows: Vec<Vec<((u32, u32), Scalar)>> =
            acc.into_iter().map(|m| m.into_iter().collect()).collect();
        let groups = rows
            .iter()
            .map(|row| {
                let mut gs = Vec::new();
                let mut pos = 0;
                while pos < row.len() {
                    let leg = row[pos].0 .0;
                    let start = pos;
                    while pos < row.len() && row[pos].0 .0 == leg {
                        pos += 1;
                    }
                    gs.push((leg, start as u32, pos as u32));
                }
                gs
            })
            .collect();
        CoproductTable { dim, rows, groups }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The expansion of `Δe_i`, sorted by leg pair.
    pub fn row(&self, i: usize) -> &[((u32, u32), Scalar)] {
        &self.rows[i]
    }

    /// Runs of `row(i)` sharing a first leg, as
    /// `(first leg, start, end)` subslice bounds in ascending leg order.
    pub fn group_bounds(&self, i: usize) -> &[(u32, u32, u32)] {
        &self.groups[i]
    }

    /// Iterates `(first leg, terms)` over the runs of `row(i)`.
    pub fn groups(&self, i: usize) -> impl Iterator<Item = (u32, &[((u32, u32), Scalar)])> + '_ {
        self.groups[i]
            .iter()
            .map(move |&(leg, start, end)| (leg, &self.rows[i][start as usize..end as usize]))
    }

    /// Total number of stored terms across all rows.
    pub fn total_len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// All entries as `(input, first leg, second leg, coefficient)` in
    /// canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, Scalar)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter().map(move |&((j, k), c)| (i, j as usize, k as usize, c))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_table() -> ProductTable {
        ProductTable::from_fn(3, |i, j| vec![((i + j) % 3, Scalar::ONE)])
    }

    #[test]
    fn product_lookup_and_row_walks_agree() {
        let t = z3_table();
        assert_eq!(t.product(1, 2), &[(0, Scalar::ONE)]);
        assert_eq!(t.row_cols(1), &[0, 1, 2]);
        assert_eq!(t.col_rows(2), &[0, 1, 2]);
        assert_eq!(t.support_len(), 9);
        assert!(t.is_monomial());
    }

    #[test]
    fn cancelling_entries_leave_no_support() {
        let t = ProductTable::from_entries(
            2,
            [
                (0, 1, 1, Scalar::ONE),
                (0, 1, 1, Scalar::from_int(-1)),
                (1, 0, 0, Scalar::new(1, 2)),
            ],
        );
        assert!(t.product(0, 1).is_empty());
        assert_eq!(t.row_cols(0), &[] as &[u32]);
        assert_eq!(t.product(1, 0), &[(0, Scalar::new(1, 2))]);
        assert!(!t.is_monomial());
    }

    #[test]
    fn coproduct_rows_sort_and_group_by_first_leg() {
        let t = CoproductTable::from_entries(
            3,
            [
                (0, 2, 1, Scalar::ONE),
                (0, 0, 2, Scalar::ONE),
                (0, 0, 1, Scalar::from_int(3)),
                (1, 1, 1, Scalar::ONE),
            ],
        );
        let row = t.row(0);
        assert_eq!(
            row,
            &[
                ((0, 1), Scalar::from_int(3)),
                ((0, 2), Scalar::ONE),
                ((2, 1), Scalar::ONE),
            ]
        );
        let groups: Vec<(u32, usize)> = t.groups(0).map(|(leg, terms)| (leg, terms.len())).collect();
        assert_eq!(groups, vec![(0, 2), (2, 1)]);
        assert_eq!(t.total_len(), 4);
    }

    #[test]
    fn entries_round_trip_through_from_entries() {
        let t = z3_table();
        let copy = ProductTable::from_entries(3, t.entries());
        assert!(t == copy);
    }
}
