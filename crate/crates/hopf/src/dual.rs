//! The dual Hopf algebra: structure constants transposed across the
//! product/coproduct and unit/counit divides.

use std::sync::Arc;

use exactalg::{AlgebraElement, BasisLabel, BasisSpace, LinearMap, Scalar};

use crate::data::HopfAlgebraData;
use crate::table::{CoproductTable, ProductTable};

/// Builds the dual of a finite-dimensional Hopf algebra on the dual basis:
/// the dual's product is the transposed coproduct and vice versa, unit and
/// counit trade places, and the antipode transposes. When a star is
/// present, the dual's star is the transpose of `star ∘ antipode`, which
/// is the rational shadow of `f*(h) = conj(f(S(h)*))`.
///
/// Basis labels swap between the two bicrossproduct conventions so that a
/// dual of a built algebra lines up with the independently built dual.
pub fn dual_hopf(h: &HopfAlgebraData) -> HopfAlgebraData {
    let d = h.dim();
    let space = dual_space(&h.space);
    let product =
        ProductTable::from_entries(d, h.coproduct.entries().map(|(i, j, k, c)| (j, k, i, c)));
    let coproduct =
        CoproductTable::from_entries(d, h.product.entries().map(|(i, j, k, c)| (k, i, j, c)));
    let unit = AlgebraElement::from_terms(
        Arc::clone(&space),
        h.counit.iter().enumerate().map(|(i, &c)| (i, c)),
    );
    let counit: Vec<Scalar> = (0..d).map(|i| h.unit.coeff(i)).collect();
    let antipode = transpose_onto(&h.antipode, &space);
    let star = h.star.as_ref().map(|st| {
        let with_antipode = st.compose(&h.antipode).expect("square maps compose");
        transpose_onto(&with_antipode, &space)
    });
    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, star)
}

fn transpose_onto(map: &LinearMap, space: &Arc<BasisSpace>) -> LinearMap {
    LinearMap::from_triplets(
        Arc::clone(space),
        Arc::clone(space),
        map.sorted_entries().into_iter().map(|(r, c, s)| (c, r, s)),
    )
}

fn dual_space(space: &Arc<BasisSpace>) -> Arc<BasisSpace> {
    match space.labels() {
        None => BasisSpace::opaque(space.dim()),
        Some(labels) => BasisSpace::labeled(labels.iter().map(dual_label).collect()),
    }
}

fn dual_label(label: &BasisLabel) -> BasisLabel {
    match label {
        BasisLabel::BicrossH { s, u } => BasisLabel::BicrossDual { s: *s, u: *u },
        BasisLabel::BicrossDual { s, u } => BasisLabel::BicrossH { s: *s, u: *u },
        BasisLabel::DoublePair(a, h) => {
            BasisLabel::DoublePair(Box::new(dual_label(a)), Box::new(dual_label(h)))
        }
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::structure_diff;
    use crate::group_algebras::{function_hopf, group_hopf};
    use crate::verify::{verify_hopf_axioms, CheckPolicy};
    use groups::builtin_group;

    #[test]
    fn dual_of_the_function_algebra_is_the_group_algebra() {
        for spec in ["cyclic:3", "sym:3", "dihedral:4"] {
            let x = builtin_group(spec).unwrap();
            let dual = dual_hopf(&function_hopf(&x));
            assert_eq!(structure_diff(&dual, &group_hopf(&x)), None, "{spec}");
        }
    }

    #[test]
    fn dual_of_the_group_algebra_is_the_function_algebra() {
        let x = builtin_group("dihedral:3").unwrap();
        assert_eq!(structure_diff(&dual_hopf(&group_hopf(&x)), &function_hopf(&x)), None);
    }

    #[test]
    fn double_dual_restores_every_structure_constant() {
        let x = builtin_group("sym:3").unwrap();
        for h in [group_hopf(&x), function_hopf(&x)] {
            let dd = dual_hopf(&dual_hopf(&h));
            assert_eq!(structure_diff(&dd, &h), None);
        }
    }

    #[test]
    fn duals_keep_passing_the_axioms() {
        let x = builtin_group("dihedral:4").unwrap();
        let dual = dual_hopf(&group_hopf(&x));
        let report = verify_hopf_axioms(&dual, &CheckPolicy::default());
        assert!(report.all_passed(), "{report}");
    }
}
