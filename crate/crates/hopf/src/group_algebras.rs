//! The two Hopf algebras every finite group carries: its group algebra and
//! its function algebra.

use std::sync::Arc;

use exactalg::{AlgebraElement, BasisSpace, LinearMap, Scalar};
use groups::FiniteGroup;

use crate::data::HopfAlgebraData;
use crate::table::{CoproductTable, ProductTable};

/// The group algebra: basis indexed by group elements, product from the
/// group, grouplike coproduct `Δx = x⊗x`, antipode and star both given by
/// inversion.
pub fn group_hopf(x: &Arc<FiniteGroup>) -> HopfAlgebraData {
    let n = x.order();
    let space = BasisSpace::opaque(n);
    let product = ProductTable::from_fn(n, |i, j| vec![(x.mul(i, j), Scalar::ONE)]);
    let unit = AlgebraElement::basis_vector(Arc::clone(&space), x.identity());
    let coproduct = CoproductTable::from_entries(n, (0..n).map(|i| (i, i, i, Scalar::ONE)));
    let counit = vec![Scalar::ONE; n];
    let inversion: Vec<usize> = (0..n).map(|i| x.inv(i)).collect();
    let antipode = LinearMap::permutation(Arc::clone(&space), &inversion);
    let star = Some(antipode.clone());
    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, star)
}

/// The function algebra: basis of point masses with pointwise product,
/// coproduct summing over factorizations `Δδ_x = Σ_{ab=x} δ_a ⊗ δ_b`,
/// counit evaluation-at-identity, antipode pulled back along inversion,
/// and the identity star (point masses are real-valued).
pub fn function_hopf(x: &Arc<FiniteGroup>) -> HopfAlgebraData {
    let n = x.order();
    let space = BasisSpace::opaque(n);
    let product = ProductTable::from_fn(n, |i, j| {
        if i == j {
            vec![(i, Scalar::ONE)]
        } else {
            Vec::new()
        }
    });
    let unit = AlgebraElement::from_terms(Arc::clone(&space), (0..n).map(|i| (i, Scalar::ONE)));
    let mut coproduct_entries = Vec::with_capacity(n * n);
    for target in 0..n {
        for a in 0..n {
            let b = x.mul(x.inv(a), target);
            coproduct_entries.push((target, a, b, Scalar::ONE));
        }
    }
    let coproduct = CoproductTable::from_entries(n, coproduct_entries);
    let counit: Vec<Scalar> =
        (0..n).map(|i| if i == x.identity() { Scalar::ONE } else { Scalar::ZERO }).collect();
    let inversion: Vec<usize> = (0..n).map(|i| x.inv(i)).collect();
    let antipode = LinearMap::permutation(Arc::clone(&space), &inversion);
    let star = Some(LinearMap::identity(Arc::clone(&space)));
    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, star)
}
