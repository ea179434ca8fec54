//! The quantum double of a finite-dimensional Hopf algebra, assembled two
//! ways on the same basis `dual ⊗ algebra`: once from any Hopf algebra
//! through its dual's antipode-twisted pairing convolution, and once from a
//! matched pair through the closed-form coadjoint actions. The two must
//! produce identical structure constants.

use std::collections::BTreeMap;
use std::sync::Arc;

use bicross::{build_h, build_hdual};
use exactalg::{AlgebraElement, BasisLabel, BasisSpace, LinearMap, Scalar};
use factorizations::MatchedPair;
use hopf::{add2, dual_hopf, CoproductTable, Elem2, HopfAlgebraData, ProductTable};
use thiserror::Error;

use crate::coadjoint::{coadjoint_actions, delta2, CoadjointActions};

/// Rejection raised when data handed to the double-specific helpers was
/// not assembled as a double.
#[derive(Debug, Error)]
pub enum DoubleError {
    #[error("not a double of the required shape: {0}")]
    ShapeError(String),
}

/// Straightened middle products `(1 ⊗ h)(b ⊗ 1)`, one sparse expansion per
/// `(h, b)` pair, each term a `(dual leg, algebra leg)` index pair.
type Cross = Vec<Vec<((u32, u32), Scalar)>>;

/// Builds the double of an arbitrary finite-dimensional Hopf algebra on
/// the basis `e*_a ⊗ e_h` (dual leg major). The product straightens every
/// middle pair through the convolution
/// `(1⊗h)(b⊗1) = Σ ⟨S(b₁), h₁⟩ ⟨b₃, h₃⟩ · b₂ ⊗ h₂`,
/// the coproduct is legwise, the antipode is
/// `S(a⊗h) = (1 ⊗ S h)(S⁻¹ a ⊗ 1)` with the dual antipode inverted
/// exactly, and the star (present whenever the input carries one) is
/// `(a⊗h)* = (1 ⊗ h*)((S² a)* ⊗ 1)`.
pub fn build_double_general(h: &HopfAlgebraData) -> HopfAlgebraData {
    let hd = dual_hopf(h);
    let product = straightened_product(&hd, h, &pairing_cross(&hd, h));
    assemble_double(&hd, h, product)
}

/// Builds the double of a matched pair from its two bicrossproduct
/// algebras, straightening middle pairs with the closed-form coadjoint
/// actions instead of the pairing convolution:
/// `(1⊗h)(b⊗1) = Σ (h₁ ▷ b₁) ⊗ (h₂ ◁ b₂)`.
/// The result equals [`build_double_general`] on the pair's algebra,
/// structure constant for structure constant.
pub fn build_double_bicross(mp: &MatchedPair) -> HopfAlgebraData {
    let h = build_h(mp);
    let hd = build_hdual(mp);
    let ca = coadjoint_actions(mp);
    let product = straightened_product(&hd, &h, &coadjoint_cross(&hd, &h, &ca));
    assemble_double(&hd, &h, product)
}

/// The canonical invertible element of the double's tensor square,
/// `Σ_a (e*_a ⊗ 1) ⊗ (1 ⊗ e_a)`, read off from the double's own basis
/// labels and unit. Rejects data whose basis is not labeled as dual ⊗
/// algebra pairs over two equal tensor factors.
pub fn double_r(d: &HopfAlgebraData) -> Result<Elem2, DoubleError> {
    for i in 0..d.dim() {
        match d.space.label(i) {
            BasisLabel::DoublePair(_, _) => {}
            other => {
                return Err(DoubleError::ShapeError(format!(
                    "basis label {other} at index {i} is not a dual–algebra pair"
                )))
            }
        }
    }
    let factors = d.space.factors();
    if factors.len() != 2 || factors[0].dim() != factors[1].dim() {
        return Err(DoubleError::ShapeError(
            "the basis space does not split into two equal tensor factors".into(),
        ));
    }
    let dh = factors[1].dim();
    let mut r = Elem2::new();
    for a in 0..dh {
        for (i, c) in d.unit.iter() {
            let (p, q) = (i / dh, i % dh);
            add2(&mut r, ((a * dh + q) as u32, (p * dh + a) as u32), c);
        }
    }
    Ok(r)
}

/// Applies the antipode to the first leg, `(S ⊗ id)r` — the exact inverse
/// of the canonical element of any quasitriangular structure on `d`.
pub fn r_inverse(d: &HopfAlgebraData, r: &Elem2) -> Elem2 {
    let mut out = Elem2::new();
    for (&(i, j), &c) in r {
        for &(k, ck) in d.antipode.column(i as usize) {
            add2(&mut out, (k as u32, j), c * ck);
        }
    }
    out
}

/// The labeled basis space of the double, dual leg major.
pub(crate) fn double_space(hd: &HopfAlgebraData, h: &HopfAlgebraData) -> Arc<BasisSpace> {
    let dh = h.dim();
    let labels = (0..dh * dh)
        .map(|i| {
            BasisLabel::DoublePair(
                Box::new(hd.space.label(i / dh)),
                Box::new(h.space.label(i % dh)),
            )
        })
        .collect();
    BasisSpace::tensor_labeled(vec![Arc::clone(&hd.space), Arc::clone(&h.space)], labels)
}

/// Middle straightening from the antipode-twisted pairing convolution,
/// pairing dual and algebra bases by index equality.
fn pairing_cross(hd: &HopfAlgebraData, h: &HopfAlgebraData) -> Cross {
    let dh = h.dim();
    let dual_triples: Vec<_> = (0..dh).map(|b| delta2(hd, b)).collect();
    let mut cross = vec![Vec::new(); dh * dh];
    for hi in 0..dh {
        let alg_triples = delta2(h, hi);
        for (b, dual_triple) in dual_triples.iter().enumerate() {
            let mut acc: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
            for &((b1, b2, b3), cb) in dual_triple {
                let sb1 = hd.antipode.column(b1 as usize);
                for &((h1, h2, h3), ch) in &alg_triples {
                    if b3 != h3 {
                        continue;
                    }
                    let c1 = coeff_at(sb1, h1 as usize);
                    if c1.is_zero() {
                        continue;
                    }
                    let slot = acc.entry((b2, h2)).or_insert(Scalar::ZERO);
                    *slot += cb * ch * c1;
                    if slot.is_zero() {
                        acc.remove(&(b2, h2));
                    }
                }
            }
            cross[hi * dh + b] = acc.into_iter().collect();
        }
    }
    cross
}

/// Middle straightening from the coadjoint action tables.
fn coadjoint_cross(hd: &HopfAlgebraData, h: &HopfAlgebraData, ca: &CoadjointActions) -> Cross {
    let dh = h.dim();
    let mut cross = vec![Vec::new(); dh * dh];
    for hi in 0..dh {
        for b in 0..dh {
            let mut acc: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
            for &((h1, h2), ch) in h.coproduct.row(hi) {
                for &((b1, b2), cb) in hd.coproduct.row(b) {
                    let (p, q) = match (
                        ca.h_on_dual(h1 as usize, b1 as usize),
                        ca.dual_on_h(h2 as usize, b2 as usize),
                    ) {
                        (Some(p), Some(q)) => (p as u32, q as u32),
                        _ => continue,
                    };
                    let slot = acc.entry((p, q)).or_insert(Scalar::ZERO);
                    *slot += ch * cb;
                    if slot.is_zero() {
                        acc.remove(&(p, q));
                    }
                }
            }
            cross[hi * dh + b] = acc.into_iter().collect();
        }
    }
    cross
}

/// Expands the full double product from the straightened middles:
/// `(a⊗h)(b⊗g) = Σ_{(p₀,q₀)} (p₀ ·_dual a) ⊗ (q₀ ·_alg g)`, summed over
/// the straightening of `(1⊗h)(b⊗1)`.
fn straightened_product(hd: &HopfAlgebraData, h: &HopfAlgebraData, cross: &Cross) -> ProductTable {
    let dh = h.dim();
    let mut entries = Vec::new();
    for hi in 0..dh {
        for b in 0..dh {
            let terms = &cross[hi * dh + b];
            if terms.is_empty() {
                continue;
            }
            for &((p0, q0), c) in terms {
                for a in 0..dh {
                    let left = hd.mul_basis(p0 as usize, a);
                    if left.is_empty() {
                        continue;
                    }
                    let i = a * dh + hi;
                    for g in 0..dh {
                        let right = h.mul_basis(q0 as usize, g);
                        if right.is_empty() {
                            continue;
                        }
                        let j = b * dh + g;
                        for &(p, cp) in left {
                            for &(q, cq) in right {
                                entries.push((i, j, p as usize * dh + q as usize, c * cp * cq));
                            }
                        }
                    }
                }
            }
        }
    }
    ProductTable::from_entries(dh * dh, entries)
}

/// Everything except the product: legwise coproduct and counit, tensor
/// unit, antipode and star computed through the assembled product table.
fn assemble_double(
    hd: &HopfAlgebraData,
    h: &HopfAlgebraData,
    product: ProductTable,
) -> HopfAlgebraData {
    let dh = h.dim();
    let d = dh * dh;
    let space = double_space(hd, h);

    let mut coproduct_entries = Vec::new();
    for a in 0..dh {
        for hi in 0..dh {
            let i = a * dh + hi;
            for &((a1, a2), ca) in hd.coproduct.row(a) {
                for &((h1, h2), ch) in h.coproduct.row(hi) {
                    coproduct_entries.push((
                        i,
                        a1 as usize * dh + h1 as usize,
                        a2 as usize * dh + h2 as usize,
                        ca * ch,
                    ));
                }
            }
        }
    }
    let coproduct = CoproductTable::from_entries(d, coproduct_entries);

    let mut unit_terms = Vec::new();
    for (p, cp) in hd.unit.iter() {
        for (q, cq) in h.unit.iter() {
            unit_terms.push((p * dh + q, cp * cq));
        }
    }
    let unit = AlgebraElement::from_terms(Arc::clone(&space), unit_terms);

    let counit: Vec<Scalar> =
        (0..d).map(|i| hd.counit_value(i / dh) * h.counit_value(i % dh)).collect();

    let antipode_inverse_dual =
        hd.antipode.invert().expect("a finite-dimensional antipode is invertible");
    let antipode = LinearMap::from_basis_images(Arc::clone(&space), Arc::clone(&space), |i| {
        let (a, hi) = (i / dh, i % dh);
        // (1 ⊗ S h) · (S⁻¹ a ⊗ 1), expanded leg by leg through the table.
        let mut out = Vec::new();
        for (p1, c1) in hd.unit.iter() {
            for &(q1, cq1) in h.antipode.column(hi) {
                let x = p1 * dh + q1;
                for &(p2, c2) in antipode_inverse_dual.column(a) {
                    for (q2, cq2) in h.unit.iter() {
                        for &(k, ck) in product.product(x, p2 * dh + q2) {
                            out.push((k as usize, c1 * cq1 * c2 * cq2 * ck));
                        }
                    }
                }
            }
        }
        out
    });

    let star = match (&hd.star, &h.star) {
        (Some(star_dual), Some(star_alg)) => {
            Some(LinearMap::from_basis_images(Arc::clone(&space), Arc::clone(&space), |i| {
                let (a, hi) = (i / dh, i % dh);
                // (1 ⊗ h*) · ((S² a)* ⊗ 1)
                let mut right_legs = Vec::new();
                for &(m1, c1) in hd.antipode.column(a) {
                    for &(m2, c2) in hd.antipode.column(m1) {
                        for &(m3, c3) in star_dual.column(m2) {
                            for (q2, cq2) in h.unit.iter() {
                                right_legs.push((m3 * dh + q2, c1 * c2 * c3 * cq2));
                            }
                        }
                    }
                }
                let mut out = Vec::new();
                for (p1, c1) in hd.unit.iter() {
                    for &(q1, cq1) in star_alg.column(hi) {
                        let x = p1 * dh + q1;
                        for &(y, cy) in &right_legs {
                            for &(k, ck) in product.product(x, y) {
                                out.push((k as usize, c1 * cq1 * cy * ck));
                            }
                        }
                    }
                }
                out
            }))
        }
        _ => None,
    };

    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, star)
}

fn coeff_at(column: &[(usize, Scalar)], row: usize) -> Scalar {
    column
        .iter()
        .find_map(|&(r, c)| (r == row).then_some(c))
        .unwrap_or(Scalar::ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;
    use groups::builtin_group;
    use hopf::{group_hopf, verify_antipode_involution, verify_hopf_axioms, CheckPolicy};

    #[test]
    fn the_double_of_the_order_two_group_algebra_is_commutative() {
        let h = group_hopf(&builtin_group("cyclic:2").unwrap());
        let d = build_double_general(&h);
        assert_eq!(d.dim(), 4);
        let report = verify_hopf_axioms(&d, &CheckPolicy::default());
        assert!(report.all_passed(), "{report}");
        assert!(verify_antipode_involution(&d).passed());
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.mul_basis(i, j), d.mul_basis(j, i), "at ({i}, {j})");
            }
        }
    }

    #[test]
    fn undoubled_data_is_rejected_by_the_canonical_element_extractor() {
        let x = builtin_group("sym:3").unwrap();
        let h = group_hopf(&x);
        let err = double_r(&h).unwrap_err();
        assert!(matches!(err, DoubleError::ShapeError(_)));
        assert!(err.to_string().starts_with("not a double of the required shape"));
    }
}
