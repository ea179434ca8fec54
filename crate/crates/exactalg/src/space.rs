//! Labeled basis spaces with optional tensor factorizations.

use std::fmt;
use std::sync::Arc;

/// Names a basis vector of one of the algebras built in this workspace.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasisLabel {
    /// `s ⊗ δ_u`: a group-part basis vector paired with a point mass.
    BicrossH { s: usize, u: usize },
    /// `δ_s ⊗ u`: a point mass paired with a group-part basis vector.
    BicrossDual { s: usize, u: usize },
    /// `a ⊗ h`: a dual-algebra basis vector tensored with an algebra one.
    DoublePair(Box<BasisLabel>, Box<BasisLabel>),
    /// `δ_x ⊗ y`: point mass on a group element tensored with a group
    /// element.
    GroupDouble { x: usize, y: usize },
    /// An unnamed slot in a plain coordinate space.
    Opaque(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::BicrossH { s, u } => write!(f, "m{s}⊗δ{u}"),
            BasisLabel::BicrossDual { s, u } => write!(f, "δ{s}⊗g{u}"),
            BasisLabel::DoublePair(a, h) => write!(f, "({a})⊗({h})"),
            BasisLabel::GroupDouble { x, y } => write!(f, "δ{x}⊗x{y}"),
            BasisLabel::Opaque(i) => write!(f, "e{i}"),
        }
    }
}

/// A finite-dimensional coordinate space, optionally carrying basis labels
/// and a factorization as a tensor product of smaller spaces.
///
/// Tensor indexing is leftmost-major throughout the workspace: the composite
/// index of `(i₁, …, i_k)` is `((i₁·d₂ + i₂)·d₃ + i₃)…`, so the leftmost
/// factor varies slowest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisSpace {
    dim: usize,
    labels: Option<Vec<BasisLabel>>,
    factors: Vec<Arc<BasisSpace>>,
}

impl BasisSpace {
    /// A space of plain unlabeled coordinates.
    pub fn opaque(dim: usize) -> Arc<BasisSpace> {
        Arc::new(BasisSpace { dim, labels: None, factors: Vec::new() })
    }

    /// A space whose basis vectors carry the given labels. Panics when
    /// labels repeat, since lookups by label would then be ambiguous.
    pub fn labeled(labels: Vec<BasisLabel>) -> Arc<BasisSpace> {
        let mut seen = labels.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), labels.len(), "basis labels must be unique");
        Arc::new(BasisSpace { dim: labels.len(), labels: Some(labels), factors: Vec::new() })
    }

    /// The tensor product of the given factors with leftmost-major indexing.
    pub fn tensor(factors: Vec<Arc<BasisSpace>>) -> Arc<BasisSpace> {
        let dim = factors.iter().map(|f| f.dim()).product();
        Arc::new(BasisSpace { dim, labels: None, factors })
    }

    /// Same as [`BasisSpace::tensor`] but with explicit labels for the
    /// composite basis (e.g. paired labels on a doubled algebra).
    pub fn tensor_labeled(factors: Vec<Arc<BasisSpace>>, labels: Vec<BasisLabel>) -> Arc<BasisSpace> {
        let dim: usize = factors.iter().map(|f| f.dim()).product();
        assert_eq!(dim, labels.len(), "label count must match the factored dimension");
        Arc::new(BasisSpace { dim, labels: Some(labels), factors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Labels when present; `None` for opaque spaces.
    pub fn labels(&self) -> Option<&[BasisLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, index: usize) -> BasisLabel {
        match &self.labels {
            Some(ls) => ls[index].clone(),
            None => BasisLabel::Opaque(index),
        }
    }

    /// Tensor factors; empty for unfactored spaces.
    pub fn factors(&self) -> &[Arc<BasisSpace>] {
        &self.factors
    }

    /// Splits a composite index into per-factor indices (leftmost-major).
    /// Panics when the space has no recorded factorization.
    pub fn split_index(&self, mut index: usize) -> Vec<usize> {
        assert!(!self.factors.is_empty(), "space has no tensor factorization");
        let mut parts = vec![0usize; self.factors.len()];
        for (slot, factor) in self.factors.iter().enumerate().rev() {
            parts[slot] = index % factor.dim();
            index /= factor.dim();
        }
        parts
    }

    /// Fuses per-factor indices into the composite index (leftmost-major).
    pub fn fuse_index(&self, parts: &[usize]) -> usize {
        assert_eq!(parts.len(), self.factors.len(), "one index per tensor factor");
        let mut index = 0usize;
        for (slot, factor) in self.factors.iter().enumerate() {
            debug_assert!(parts[slot] < factor.dim());
            index = index * factor.dim() + parts[slot];
        }
        index
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leftmost_major_round_trip() {
        let space = BasisSpace::tensor(vec![BasisSpace::opaque(2), BasisSpace::opaque(3), BasisSpace::opaque(5)]);
        assert_eq!(space.dim(), 30);
        for i in 0..30 {
            let parts = space.split_index(i);
            assert_eq!(space.fuse_index(&parts), i);
        }
        // The leftmost factor varies slowest.
        assert_eq!(space.split_index(0), vec![0, 0, 0]);
        assert_eq!(space.split_index(1), vec![0, 0, 1]);
        assert_eq!(space.split_index(5), vec![0, 1, 0]);
        assert_eq!(space.split_index(15), vec![1, 0, 0]);
    }

    #[test]
    #[should_panic(expected = "unique")]
    fn duplicate_labels_are_rejected() {
        BasisSpace::labeled(vec![BasisLabel::Opaque(0), BasisLabel::Opaque(0)]);
    }

    #[test]
    fn labels_render_compactly() {
        assert_eq!(BasisLabel::BicrossH { s: 1, u: 2 }.to_string(), "m1⊗δ2");
        assert_eq!(
            BasisLabel::DoublePair(
                Box::new(BasisLabel::BicrossDual { s: 0, u: 3 }),
                Box::new(BasisLabel::BicrossH { s: 1, u: 2 })
            )
            .to_string(),
            "(δ0⊗g3)⊗(m1⊗δ2)"
        );
    }
}
