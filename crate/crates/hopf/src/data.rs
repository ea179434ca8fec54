//! The structure-constant record for a finite-dimensional Hopf algebra.

use std::sync::Arc;

use exactalg::{AlgebraElement, BasisSpace, LinearMap, Scalar};

use crate::table::{CoproductTable, ProductTable};

/// A finite-dimensional Hopf algebra given by structure constants: a
/// product and coproduct table, unit element, counit covector, antipode,
/// and an optional star (involution) map.
///
/// Fields are public so fault-injection tests can corrupt individual
/// entries; [`crate::verify_hopf_axioms`] is the gatekeeper that decides
/// whether a value actually is a Hopf algebra.
#[derive(Clone)]
pub struct HopfAlgebraData {
    pub space: Arc<BasisSpace>,
    pub product: ProductTable,
    pub unit: AlgebraElement,
    pub coproduct: CoproductTable,
    pub counit: Vec<Scalar>,
    pub antipode: LinearMap,
    pub star: Option<LinearMap>,
}

impl std::fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "HopfAlgebraData(dim {}, {} product entries, {} coproduct entries, star: {})",
            self.dim(),
            self.product.entries().count(),
            self.coproduct.total_len(),
            self.star.is_some(),
        )
    }
}

impl HopfAlgebraData {
    /// Bundles the six structure maps, checking only that their shapes
    /// agree with the space (contents are the verifier's business).
    pub fn new(
        space: Arc<BasisSpace>,
        product: ProductTable,
        unit: AlgebraElement,
        coproduct: CoproductTable,
        counit: Vec<Scalar>,
        antipode: LinearMap,
        star: Option<LinearMap>,
    ) -> HopfAlgebraData {
        let d = space.dim();
        assert_eq!(product.dim(), d, "product table dimension");
        assert_eq!(unit.space().dim(), d, "unit element dimension");
        assert_eq!(coproduct.dim(), d, "coproduct table dimension");
        assert_eq!(counit.len(), d, "counit covector length");
        assert_eq!(antipode.cols(), d, "antipode domain dimension");
        assert_eq!(antipode.rows(), d, "antipode codomain dimension");
        if let Some(st) = &star {
            assert_eq!(st.cols(), d, "star domain dimension");
            assert_eq!(st.rows(), d, "star codomain dimension");
        }
        HopfAlgebraData { space, product, unit, coproduct, counit, antipode, star }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The expansion of `e_i · e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(u32, Scalar)] {
        self.product.product(i, j)
    }

    /// Product of two sparse elements of this algebra.
    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        assert_eq!(a.space().dim(), self.dim(), "left factor dimension");
        assert_eq!(b.space().dim(), self.dim(), "right factor dimension");
        let mut out = AlgebraElement::zero(Arc::clone(&self.space));
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                for &(k, c) in self.product.product(i, j) {
                    out.add_term(k as usize, ca * cb * c);
                }
            }
        }
        out
    }

    pub fn counit_value(&self, i: usize) -> Scalar {
        self.counit[i]
    }

    pub fn counit_of(&self, a: &AlgebraElement) -> Scalar {
        let mut out = Scalar::ZERO;
        for (i, c) in a.iter() {
            out += c * self.counit[i];
        }
        out
    }

    /// The tensor square of this algebra's space (no labels).
    pub fn tensor_square(&self) -> Arc<BasisSpace> {
        BasisSpace::tensor(vec![Arc::clone(&self.space), Arc::clone(&self.space)])
    }
}

/// Compares every structure constant of two algebras, returning a
/// description of the first discrepancy or `None` when they agree
/// entrywise. Basis labels are not compared; this is the test used to
/// decide whether two constructions built "the same" Hopf algebra on the
/// same index space.
pub fn structure_diff(a: &HopfAlgebraData, b: &HopfAlgebraData) -> Option<String> {
    if a.dim() != b.dim() {
        return Some(format!("dimension {} vs {}", a.dim(), b.dim()));
    }
    let mut ae = a.product.entries();
    let mut be = b.product.entries();
    loop {
        match (ae.next(), be.next()) {
            (None, None) => break,
            (x, y) if x == y => continue,
            (x, y) => {
                return Some(format!("product entries diverge: {x:?} vs {y:?}"));
            }
        }
    }
    let mut ac = a.coproduct.entries();
    let mut bc = b.coproduct.entries();
    loop {
        match (ac.next(), bc.next()) {
            (None, None) => break,
            (x, y) if x == y => continue,
            (x, y) => {
                return Some(format!("coproduct entries diverge: {x:?} vs {y:?}"));
            }
        }
    }
    if a.unit.iter().ne(b.unit.iter()) {
        return Some(format!("units differ: {:?} vs {:?}", a.unit, b.unit));
    }
    if a.counit != b.counit {
        return Some("counit covectors differ".into());
    }
    if a.antipode.sorted_entries() != b.antipode.sorted_entries() {
        return Some("antipode matrices differ".into());
    }
    match (&a.star, &b.star) {
        (None, None) => {}
        (Some(x), Some(y)) => {
            if x.sorted_entries() != y.sorted_entries() {
                return Some("star matrices differ".into());
            }
        }
        (x, y) => {
            return Some(format!(
                "star present on one side only: {} vs {}",
                x.is_some(),
                y.is_some()
            ));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebras::group_hopf;
    use groups::builtin_group;

    #[test]
    fn element_products_follow_the_table() {
        let h = group_hopf(&builtin_group("cyclic:4").unwrap());
        let a = AlgebraElement::from_terms(
            Arc::clone(&h.space),
            [(1, Scalar::ONE), (2, Scalar::from_int(2))],
        );
        let b = AlgebraElement::basis_vector(Arc::clone(&h.space), 3);
        let ab = h.mul(&a, &b);
        assert_eq!(ab.coeff(0), Scalar::ONE);
        assert_eq!(ab.coeff(1), Scalar::from_int(2));
        assert_eq!(ab.support_size(), 2);
    }

    #[test]
    fn structure_diff_pinpoints_a_corrupted_entry() {
        let h = group_hopf(&builtin_group("cyclic:3").unwrap());
        assert_eq!(structure_diff(&h, &h), None);
        let mut bad = h.clone();
        bad.counit[1] = Scalar::from_int(7);
        assert!(structure_diff(&h, &bad).unwrap().contains("counit"));
        let mut swapped = h.clone();
        swapped.antipode = LinearMap::identity(Arc::clone(&h.space));
        assert!(structure_diff(&h, &swapped).unwrap().contains("antipode"));
    }
}
