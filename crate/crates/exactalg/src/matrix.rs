//! Sparse exact matrices between basis spaces.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::element::AlgebraElement;
use crate::scalar::Scalar;
use crate::space::BasisSpace;

#[derive(Debug, thiserror::Error)]
pub enum LinalgError {
    #[error("shape mismatch in {context}: expected dimension {expected}, found {found}")]
    ShapeError { context: String, expected: usize, found: usize },
    #[error("not a permutation matrix: {context}")]
    NotPermutation { context: String },
}

/// A linear map stored column-major: `cols[c]` is the image of the `c`-th
/// domain basis vector as a sorted sparse vector of `(row, coefficient)`
/// pairs. Zero coefficients are never stored, so equality of the stored
/// data is equality of maps.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    domain: Arc<BasisSpace>,
    codomain: Arc<BasisSpace>,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl LinearMap {
    pub fn zero(domain: Arc<BasisSpace>, codomain: Arc<BasisSpace>) -> LinearMap {
        let cols = vec![Vec::new(); domain.dim()];
        LinearMap { domain, codomain, cols }
    }

    pub fn identity(space: Arc<BasisSpace>) -> LinearMap {
        let cols = (0..space.dim()).map(|i| vec![(i, Scalar::ONE)]).collect();
        LinearMap { domain: Arc::clone(&space), codomain: space, cols }
    }

    /// The map sending the `c`-th basis vector to the `image[c]`-th one.
    pub fn permutation(space: Arc<BasisSpace>, image: &[usize]) -> LinearMap {
        assert_eq!(image.len(), space.dim(), "one image per basis vector");
        let cols = image
            .iter()
            .map(|&r| {
                assert!(r < space.dim());
                vec![(r, Scalar::ONE)]
            })
            .collect();
        LinearMap { domain: Arc::clone(&space), codomain: space, cols }
    }

    /// Builds a map from its action on domain basis vectors. The closure
    /// returns the sparse image of each basis vector; terms may repeat and
    /// are accumulated.
    pub fn from_basis_images(
        domain: Arc<BasisSpace>,
        codomain: Arc<BasisSpace>,
        mut image: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> LinearMap {
        let mut cols = Vec::with_capacity(domain.dim());
        for c in 0..domain.dim() {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (r, s) in image(c) {
                assert!(r < codomain.dim(), "row index out of range");
                let slot = acc.entry(r).or_insert(Scalar::ZERO);
                *slot += s;
                if slot.is_zero() {
                    acc.remove(&r);
                }
            }
            cols.push(acc.into_iter().collect());
        }
        LinearMap { domain, codomain, cols }
    }

    /// Builds a map from `(row, col, coefficient)` triplets, accumulating
    /// repeats exactly.
    pub fn from_triplets(
        domain: Arc<BasisSpace>,
        codomain: Arc<BasisSpace>,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> LinearMap {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); domain.dim()];
        for (r, c, s) in triplets {
            assert!(c < domain.dim() && r < codomain.dim(), "matrix entry out of range");
            let slot = acc[c].entry(r).or_insert(Scalar::ZERO);
            *slot += s;
            if slot.is_zero() {
                acc[c].remove(&r);
            }
        }
        LinearMap {
            domain,
            codomain,
            cols: acc.into_iter().map(|m| m.into_iter().collect()).collect(),
        }
    }

    pub fn domain(&self) -> &Arc<BasisSpace> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<BasisSpace> {
        &self.codomain
    }

    pub fn rows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn entry(&self, row: usize, col: usize) -> Scalar {
        match self.cols[col].binary_search_by_key(&row, |&(r, _)| r) {
            Ok(k) => self.cols[col][k].1,
            Err(_) => Scalar::ZERO,
        }
    }

    /// The sparse image of the `col`-th basis vector.
    pub fn column(&self, col: usize) -> &[(usize, Scalar)] {
        &self.cols[col]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// All entries sorted by `(row, col)` — the canonical serialization
    /// order.
    pub fn sorted_entries(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<(usize, usize, Scalar)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, s)| (r, c, s)))
            .collect();
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    pub fn transpose(&self) -> LinearMap {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.codomain.dim()];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, s) in col {
                cols[r].push((c, s));
            }
        }
        // Pushing in ascending column order keeps each new column sorted.
        LinearMap {
            domain: Arc::clone(&self.codomain),
            codomain: Arc::clone(&self.domain),
            cols,
        }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.check_same_shape(other, "matrix addition")?;
        let out = LinearMap::from_basis_images(
            Arc::clone(&self.domain),
            Arc::clone(&self.codomain),
            |c| {
                let mut v = self.cols[c].clone();
                v.extend_from_slice(&other.cols[c]);
                v
            },
        );
        Ok(out)
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap, LinalgError> {
        self.check_same_shape(other, "matrix subtraction")?;
        let out = LinearMap::from_basis_images(
            Arc::clone(&self.domain),
            Arc::clone(&self.codomain),
            |c| {
                let mut v = self.cols[c].clone();
                v.extend(other.cols[c].iter().map(|&(r, s)| (r, -s)));
                v
            },
        );
        Ok(out)
    }

    pub fn scale(&self, factor: Scalar) -> LinearMap {
        if factor.is_zero() {
            return LinearMap::zero(Arc::clone(&self.domain), Arc::clone(&self.codomain));
        }
        LinearMap {
            domain: Arc::clone(&self.domain),
            codomain: Arc::clone(&self.codomain),
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|&(r, s)| (r, s * factor)).collect())
                .collect(),
        }
    }

    fn check_same_shape(&self, other: &LinearMap, context: &str) -> Result<(), LinalgError> {
        if self.cols() != other.cols() {
            return Err(LinalgError::ShapeError {
                context: context.into(),
                expected: self.cols(),
                found: other.cols(),
            });
        }
        if self.rows() != other.rows() {
            return Err(LinalgError::ShapeError {
                context: context.into(),
                expected: self.rows(),
                found: other.rows(),
            });
        }
        Ok(())
    }

    /// Applies the map to a sparse element.
    pub fn apply(&self, v: &AlgebraElement) -> Result<AlgebraElement, LinalgError> {
        if v.space().dim() != self.domain.dim() {
            return Err(LinalgError::ShapeError {
                context: "matrix application".into(),
                expected: self.domain.dim(),
                found: v.space().dim(),
            });
        }
        let mut out = AlgebraElement::zero(Arc::clone(&self.codomain));
        for (c, coeff) in v.iter() {
            for &(r, s) in &self.cols[c] {
                out.add_term(r, coeff * s);
            }
        }
        Ok(out)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, LinalgError> {
        if other.codomain.dim() != self.domain.dim() {
            return Err(LinalgError::ShapeError {
                context: "matrix composition".into(),
                expected: self.domain.dim(),
                found: other.codomain.dim(),
            });
        }
        let out = LinearMap::from_basis_images(
            Arc::clone(&other.domain),
            Arc::clone(&self.codomain),
            |c| {
                let mut acc = Vec::new();
                for &(mid, s) in &other.cols[c] {
                    for &(r, t) in &self.cols[mid] {
                        acc.push((r, s * t));
                    }
                }
                acc
            },
        );
        Ok(out)
    }

    /// Kronecker product with leftmost-major indexing:
    /// `(a ⊗ b)(v ⊗ w) = a(v) ⊗ b(w)`.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let domain = BasisSpace::tensor(vec![Arc::clone(&self.domain), Arc::clone(&other.domain)]);
        let codomain =
            BasisSpace::tensor(vec![Arc::clone(&self.codomain), Arc::clone(&other.codomain)]);
        let bd = other.domain.dim();
        let bc = other.codomain.dim();
        let mut cols = Vec::with_capacity(domain.dim());
        for c1 in 0..self.domain.dim() {
            for c2 in 0..bd {
                let mut col = Vec::with_capacity(self.cols[c1].len() * other.cols[c2].len());
                for &(r1, s1) in &self.cols[c1] {
                    for &(r2, s2) in &other.cols[c2] {
                        col.push((r1 * bc + r2, s1 * s2));
                    }
                }
                // Outer loop over r1 ascending and inner over r2 ascending
                // yields sorted rows directly.
                cols.push(col);
            }
        }
        LinearMap { domain, codomain, cols }
    }

    /// When the map is a permutation matrix (exactly one entry per row and
    /// column, each equal to 1), returns `image` with
    /// `image[col] = row`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.domain.dim() != self.codomain.dim() {
            return None;
        }
        let n = self.domain.dim();
        let mut image = vec![usize::MAX; n];
        let mut hit = vec![false; n];
        for (c, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                &[(r, s)] if s.is_one() && !hit[r] => {
                    image[c] = r;
                    hit[r] = true;
                }
                _ => return None,
            }
        }
        Some(image)
    }

    /// Exact inverse. Monomial matrices (one entry per row and column)
    /// invert in linear time; anything else falls back to Gauss–Jordan
    /// elimination, which is cubic and intended for small dimensions.
    /// Returns `None` for singular (or non-square) maps.
    pub fn invert(&self) -> Option<LinearMap> {
        let n = self.domain.dim();
        if self.codomain.dim() != n {
            return None;
        }
        if let Some(cols) = self.try_monomial_inverse() {
            return Some(LinearMap {
                domain: Arc::clone(&self.codomain),
                codomain: Arc::clone(&self.domain),
                cols,
            });
        }
        self.dense_inverse()
    }

    fn try_monomial_inverse(&self) -> Option<Vec<Vec<(usize, Scalar)>>> {
        let n = self.domain.dim();
        let mut inv_cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
        for (c, col) in self.cols.iter().enumerate() {
            match col.as_slice() {
                &[(r, s)] if inv_cols[r].is_empty() => inv_cols[r] = vec![(c, s.recip())],
                _ => return None,
            }
        }
        Some(inv_cols)
    }

    /// Exact rank by Gaussian elimination. Dense in the matrix shape, so
    /// intended for small dimensions (nondegeneracy queries on pairings).
    pub fn rank(&self) -> usize {
        let rows = self.rows();
        let cols_n = self.cols();
        let mut a = vec![vec![Scalar::ZERO; cols_n]; rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, s) in col {
                a[r][c] = s;
            }
        }
        let mut rank = 0;
        for col in 0..cols_n {
            let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = a[rank][col].recip();
            for j in col..cols_n {
                a[rank][j] *= inv;
            }
            for r in 0..rows {
                if r != rank && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for j in col..cols_n {
                        let p = a[rank][j];
                        a[r][j] -= factor * p;
                    }
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    fn dense_inverse(&self) -> Option<LinearMap> {
        let n = self.domain.dim();
        // Augmented [A | I], row-reduced in place.
        let mut a = vec![vec![Scalar::ZERO; n]; n];
        let mut b = vec![vec![Scalar::ZERO; n]; n];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, s) in col {
                a[r][c] = s;
            }
        }
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = Scalar::ONE;
        }
        for pivot in 0..n {
            let found = (pivot..n).find(|&r| !a[r][pivot].is_zero())?;
            a.swap(pivot, found);
            b.swap(pivot, found);
            let inv = a[pivot][pivot].recip();
            for j in 0..n {
                a[pivot][j] *= inv;
                b[pivot][j] *= inv;
            }
            for r in 0..n {
                if r == pivot || a[r][pivot].is_zero() {
                    continue;
                }
                let factor = a[r][pivot];
                for j in 0..n {
                    let (ap, bp) = (a[pivot][j], b[pivot][j]);
                    a[r][j] -= factor * ap;
                    b[r][j] -= factor * bp;
                }
            }
        }
        let triplets = (0..n).flat_map(|r| {
            let row = &b[r];
            row.iter()
                .enumerate()
                .filter(|(_, s)| !s.is_zero())
                .map(move |(c, &s)| (r, c, s))
                .collect::<Vec<_>>()
        });
        Some(LinearMap::from_triplets(
            Arc::clone(&self.codomain),
            Arc::clone(&self.domain),
            triplets,
        ))
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearMap({}×{}, {} entries)", self.rows(), self.cols(), self.nnz())
    }
}

/// Free function mirror of [`LinearMap::tensor`].
pub fn tensor(a: &LinearMap, b: &LinearMap) -> LinearMap {
    a.tensor(b)
}

/// Free function mirror of [`LinearMap::compose`]: `compose(a, b) = a ∘ b`.
pub fn compose(a: &LinearMap, b: &LinearMap) -> Result<LinearMap, LinalgError> {
    a.compose(b)
}

/// Free function mirror of [`LinearMap::apply`].
pub fn apply(a: &LinearMap, v: &AlgebraElement) -> Result<AlgebraElement, LinalgError> {
    a.apply(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip2() -> LinearMap {
        LinearMap::permutation(BasisSpace::opaque(2), &[1, 0])
    }

    #[test]
    fn identity_tensor_identity() {
        let id2 = LinearMap::identity(BasisSpace::opaque(2));
        let id3 = LinearMap::identity(BasisSpace::opaque(3));
        let id6 = id2.tensor(&id3);
        assert_eq!(id6, LinearMap::identity(id6.domain().clone()));
    }

    #[test]
    fn tensoring_with_the_one_dimensional_identity_changes_nothing() {
        let f = flip2();
        let id1 = LinearMap::identity(BasisSpace::opaque(1));
        let t = f.tensor(&id1);
        assert_eq!(t.sorted_entries(), f.sorted_entries());
    }

    #[test]
    fn tensor_square_of_flip_matches_independent_evaluation() {
        let f = flip2();
        let ff = f.tensor(&f);
        for i in 0..2 {
            for j in 0..2 {
                let v = AlgebraElement::basis_vector(ff.domain().clone(), i * 2 + j);
                let image = ff.apply(&v).unwrap();
                // (flip ⊗ flip)(e_i ⊗ e_j) = e_{1-i} ⊗ e_{1-j}
                assert_eq!(image.coeff((1 - i) * 2 + (1 - j)), Scalar::ONE);
                assert_eq!(image.support_size(), 1);
            }
        }
    }

    #[test]
    fn compose_with_identity_and_with_inverse() {
        let f = flip2();
        let id = LinearMap::identity(f.domain().clone());
        assert_eq!(compose(&id, &f).unwrap(), f);
        assert_eq!(compose(&f, &f).unwrap(), id);
    }

    #[test]
    fn composition_shape_mismatch_is_reported() {
        let f = flip2();
        let g = LinearMap::identity(BasisSpace::opaque(3));
        assert!(matches!(f.compose(&g), Err(LinalgError::ShapeError { .. })));
    }

    #[test]
    fn dense_inverse_round_trips() {
        let space = BasisSpace::opaque(3);
        let m = LinearMap::from_triplets(
            Arc::clone(&space),
            Arc::clone(&space),
            [
                (0, 0, Scalar::from_int(2)),
                (0, 1, Scalar::ONE),
                (1, 1, Scalar::from_int(3)),
                (2, 0, Scalar::ONE),
                (2, 2, Scalar::new(1, 2)),
            ],
        );
        let inv = m.invert().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), LinearMap::identity(space));
        // Singular maps report as such.
        let s = LinearMap::from_triplets(
            inv.domain().clone(),
            inv.domain().clone(),
            [(0, 0, Scalar::ONE), (1, 0, Scalar::ONE)],
        );
        assert!(s.invert().is_none());
    }

    #[test]
    fn permutation_detection_rejects_scaled_entries() {
        let space = BasisSpace::opaque(2);
        let doubled = LinearMap::from_triplets(
            Arc::clone(&space),
            Arc::clone(&space),
            [(0, 0, Scalar::from_int(2)), (1, 1, Scalar::ONE)],
        );
        assert!(doubled.as_permutation().is_none());
        assert_eq!(flip2().as_permutation(), Some(vec![1, 0]));
    }

    #[test]
    fn transpose_swaps_entry_indices() {
        let space = BasisSpace::opaque(3);
        let m = LinearMap::from_triplets(
            Arc::clone(&space),
            Arc::clone(&space),
            [(0, 1, Scalar::from_int(5)), (2, 0, Scalar::ONE)],
        );
        let t = m.transpose();
        assert_eq!(t.entry(1, 0), Scalar::from_int(5));
        assert_eq!(t.entry(0, 2), Scalar::ONE);
        assert_eq!(t.nnz(), 2);
    }

    #[test]
    fn rank_counts_pivots_exactly() {
        let space = BasisSpace::opaque(3);
        assert_eq!(LinearMap::identity(Arc::clone(&space)).rank(), 3);
        assert_eq!(LinearMap::zero(Arc::clone(&space), Arc::clone(&space)).rank(), 0);
        // Row 2 = row 0 + row 1: rank drops to 2.
        let deps = LinearMap::from_triplets(
            Arc::clone(&space),
            Arc::clone(&space),
            [
                (0, 0, Scalar::ONE),
                (1, 1, Scalar::from_int(3)),
                (2, 0, Scalar::ONE),
                (2, 1, Scalar::from_int(3)),
            ],
        );
        assert_eq!(deps.rank(), 2);
        // Rectangular: a 1×3 covector has rank 1.
        let cov = LinearMap::from_triplets(
            Arc::clone(&space),
            BasisSpace::opaque(1),
            [(0, 0, Scalar::ONE), (0, 2, Scalar::from_int(-2))],
        );
        assert_eq!(cov.rank(), 1);
    }
}
