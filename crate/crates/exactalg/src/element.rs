//! Sparse vectors over a labeled basis space.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;
use crate::space::BasisSpace;

/// A sparse element of a [`BasisSpace`]: a finite rational combination of
/// basis vectors. Zero coordinates are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    space: Arc<BasisSpace>,
    coords: BTreeMap<usize, Scalar>,
}

impl AlgebraElement {
    pub fn zero(space: Arc<BasisSpace>) -> AlgebraElement {
        AlgebraElement { space, coords: BTreeMap::new() }
    }

    /// The basis vector at `index` scaled by `coeff`.
    pub fn term(space: Arc<BasisSpace>, index: usize, coeff: Scalar) -> AlgebraElement {
        let mut e = AlgebraElement::zero(space);
        e.add_term(index, coeff);
        e
    }

    pub fn basis_vector(space: Arc<BasisSpace>, index: usize) -> AlgebraElement {
        AlgebraElement::term(space, index, Scalar::ONE)
    }

    pub fn from_terms(
        space: Arc<BasisSpace>,
        terms: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> AlgebraElement {
        let mut e = AlgebraElement::zero(space);
        for (i, c) in terms {
            e.add_term(i, c);
        }
        e
    }

    pub fn space(&self) -> &Arc<BasisSpace> {
        &self.space
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.coords.len()
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.coords.get(&index).copied().unwrap_or(Scalar::ZERO)
    }

    /// Sorted iteration over the nonzero coordinates.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.coords.iter().map(|(&i, &c)| (i, c))
    }

    /// Adds `coeff` at `index`, dropping the slot if it cancels to zero.
    pub fn add_term(&mut self, index: usize, coeff: Scalar) {
        assert!(index < self.space.dim(), "coordinate index out of range");
        if coeff.is_zero() {
            return;
        }
        let slot = self.coords.entry(index).or_insert(Scalar::ZERO);
        *slot += coeff;
        if slot.is_zero() {
            self.coords.remove(&index);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.space.dim(), other.space.dim(), "element spaces differ");
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.space.dim(), other.space.dim(), "element spaces differ");
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, -c);
        }
        out
    }

    pub fn scale(&self, factor: Scalar) -> AlgebraElement {
        if factor.is_zero() {
            return AlgebraElement::zero(Arc::clone(&self.space));
        }
        AlgebraElement {
            space: Arc::clone(&self.space),
            coords: self.coords.iter().map(|(&i, &c)| (i, c * factor)).collect(),
        }
    }

    /// Tensor product of two elements in the tensor space `space`, which
    /// must factor as `self.space ⊗ other.space` (dimensions checked).
    pub fn tensor(&self, other: &AlgebraElement, space: Arc<BasisSpace>) -> AlgebraElement {
        assert_eq!(
            space.dim(),
            self.space.dim() * other.space.dim(),
            "target space dimension must be the product"
        );
        let right_dim = other.space.dim();
        let mut out = AlgebraElement::zero(space);
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                out.add_term(i * right_dim + j, a * b);
            }
        }
        out
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.space.label(i))?;
            } else {
                write!(f, "{}·{}", c, self.space.label(i))?;
            }
        }
        Ok(())
    }
}
