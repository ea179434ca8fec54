//! Construction of the two mirrored Hopf algebras attached to a matched
//! pair of group actions.
//!
//! Both algebras live on the index space `s·|G| + u` for `s ∈ M`, `u ∈ G`:
//!
//! * `H = kM▷◀k(G)`, basis `s ⊗ δ_u`: the group algebra of `M` smashed
//!   against functions on `G`, with the coproduct twisted by `◁`.
//! * `H* = k(M)▶◁kG`, basis `δ_s ⊗ u`: functions on `M` smashed against
//!   the group algebra of `G`, with the coproduct twisted by `▷`.
//!
//! Every structure constant is ±0/1 and every structure map other than the
//! product is a basis permutation, so both fit [`HopfAlgebraData`] with
//! monomial tables.

use std::sync::Arc;

use exactalg::{AlgebraElement, BasisLabel, BasisSpace, LinearMap, Scalar};
use factorizations::MatchedPair;
use hopf::{CoproductTable, HopfAlgebraData, ProductTable};

/// Fused index of the pair `(s, u)` with `u` varying fastest.
#[inline]
pub(crate) fn pair_index(n_g: usize, s: usize, u: usize) -> usize {
    s * n_g + u
}

/// The labeled basis space of `H`: index `s·|G|+u` is `s ⊗ δ_u`.
pub(crate) fn h_space(mp: &MatchedPair) -> Arc<BasisSpace> {
    let n_g = mp.g_order();
    let labels = (0..mp.m_order())
        .flat_map(|s| (0..n_g).map(move |u| BasisLabel::BicrossH { s, u }))
        .collect();
    BasisSpace::labeled(labels)
}

/// The labeled basis space of `H*`: index `s·|G|+u` is `δ_s ⊗ u`.
pub(crate) fn hdual_space(mp: &MatchedPair) -> Arc<BasisSpace> {
    let n_g = mp.g_order();
    let labels = (0..mp.m_order())
        .flat_map(|s| (0..n_g).map(move |u| BasisLabel::BicrossDual { s, u }))
        .collect();
    BasisSpace::labeled(labels)
}

/// Builds `H = kM▷◀k(G)`:
///
/// * product: `(s⊗δ_u)(t⊗δ_v) = [u = t▷v] · (st ⊗ δ_v)`
/// * coproduct: `Δ(s⊗δ_u) = Σ_{x·y=u} (s⊗δ_x) ⊗ ((s◁x)⊗δ_y)`
/// * unit `Σ_u e⊗δ_u`, counit `[u = e]`
/// * antipode: `S(s⊗δ_u) = (s◁u)⁻¹ ⊗ δ_{(s▷u)⁻¹}`
/// * star: `(s⊗δ_u)* = s⁻¹ ⊗ δ_{s▷u}`
pub fn build_h(mp: &MatchedPair) -> HopfAlgebraData {
    let (n_m, n_g) = (mp.m_order(), mp.g_order());
    let d = n_m * n_g;
    let space = h_space(mp);

    let mut prod = Vec::with_capacity(n_m * n_m * n_g);
    for s in 0..n_m {
        for t in 0..n_m {
            for v in 0..n_g {
                let u = mp.act_left(t, v);
                prod.push((
                    pair_index(n_g, s, u),
                    pair_index(n_g, t, v),
                    pair_index(n_g, mp.m_mul(s, t), v),
                    Scalar::ONE,
                ));
            }
        }
    }
    let product = ProductTable::from_entries(d, prod);

    let mut cop = Vec::with_capacity(d * n_g);
    for s in 0..n_m {
        for u in 0..n_g {
            for x in 0..n_g {
                let y = mp.g_mul(mp.g_inv(x), u);
                cop.push((
                    pair_index(n_g, s, u),
                    pair_index(n_g, s, x),
                    pair_index(n_g, mp.act_right(s, x), y),
                    Scalar::ONE,
                ));
            }
        }
    }
    let coproduct = CoproductTable::from_entries(d, cop);

    let unit = AlgebraElement::from_terms(
        Arc::clone(&space),
        (0..n_g).map(|u| (pair_index(n_g, 0, u), Scalar::ONE)),
    );
    let counit: Vec<Scalar> =
        (0..d).map(|i| if i % n_g == 0 { Scalar::ONE } else { Scalar::ZERO }).collect();

    let antipode_image: Vec<usize> = (0..d)
        .map(|i| {
            let (s, u) = (i / n_g, i % n_g);
            pair_index(n_g, mp.m_inv(mp.act_right(s, u)), mp.g_inv(mp.act_left(s, u)))
        })
        .collect();
    let antipode = LinearMap::permutation(Arc::clone(&space), &antipode_image);

    let star_image: Vec<usize> = (0..d)
        .map(|i| {
            let (s, u) = (i / n_g, i % n_g);
            pair_index(n_g, mp.m_inv(s), mp.act_left(s, u))
        })
        .collect();
    let star = LinearMap::permutation(Arc::clone(&space), &star_image);

    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, Some(star))
}

/// Builds `H* = k(M)▶◁kG`:
///
/// * product: `(δ_s⊗u)(δ_t⊗v) = [s◁u = t] · (δ_s ⊗ uv)`
/// * coproduct: `Δ(δ_s⊗u) = Σ_{a·b=s} (δ_a⊗(b▷u)) ⊗ (δ_b⊗u)`
/// * unit `Σ_s δ_s⊗e`, counit `[s = e]`
/// * antipode: `S(δ_s⊗u) = δ_{(s◁u)⁻¹} ⊗ (s▷u)⁻¹`
/// * star: `(δ_s⊗u)* = δ_{s◁u} ⊗ u⁻¹`
pub fn build_hdual(mp: &MatchedPair) -> HopfAlgebraData {
    let (n_m, n_g) = (mp.m_order(), mp.g_order());
    let d = n_m * n_g;
    let space = hdual_space(mp);

    let mut prod = Vec::with_capacity(n_m * n_g * n_g);
    for s in 0..n_m {
        for u in 0..n_g {
            let t = mp.act_right(s, u);
            for v in 0..n_g {
                prod.push((
                    pair_index(n_g, s, u),
                    pair_index(n_g, t, v),
                    pair_index(n_g, s, mp.g_mul(u, v)),
                    Scalar::ONE,
                ));
            }
        }
    }
    let product = ProductTable::from_entries(d, prod);

    let mut cop = Vec::with_capacity(d * n_m);
    for s in 0..n_m {
        for u in 0..n_g {
            for b in 0..n_m {
                let a = mp.m_mul(s, mp.m_inv(b));
                cop.push((
                    pair_index(n_g, s, u),
                    pair_index(n_g, a, mp.act_left(b, u)),
                    pair_index(n_g, b, u),
                    Scalar::ONE,
                ));
            }
        }
    }
    let coproduct = CoproductTable::from_entries(d, cop);

    let unit = AlgebraElement::from_terms(
        Arc::clone(&space),
        (0..n_m).map(|s| (pair_index(n_g, s, 0), Scalar::ONE)),
    );
    let counit: Vec<Scalar> =
        (0..d).map(|i| if i / n_g == 0 { Scalar::ONE } else { Scalar::ZERO }).collect();

    let antipode_image: Vec<usize> = (0..d)
        .map(|i| {
            let (s, u) = (i / n_g, i % n_g);
            pair_index(n_g, mp.m_inv(mp.act_right(s, u)), mp.g_inv(mp.act_left(s, u)))
        })
        .collect();
    let antipode = LinearMap::permutation(Arc::clone(&space), &antipode_image);

    let star_image: Vec<usize> = (0..d)
        .map(|i| {
            let (s, u) = (i / n_g, i % n_g);
            pair_index(n_g, mp.act_right(s, u), mp.g_inv(u))
        })
        .collect();
    let star = LinearMap::permutation(Arc::clone(&space), &star_image);

    HopfAlgebraData::new(space, product, unit, coproduct, counit, antipode, Some(star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use factorizations::derive_matched_pair;
    use groups::{builtin_group, Subgroup};
    use hopf::{verify_hopf_axioms, CheckPolicy};

    /// The order-6 symmetric group factored with the 3-cycle subgroup as
    /// `G` and a transposition as `M`.
    fn s3_pair() -> MatchedPair {
        let x = builtin_group("sym:3").unwrap();
        let three_cycle = (0..x.order()).find(|&e| x.element_order(e) == 3).unwrap();
        let transposition = (0..x.order()).find(|&e| x.element_order(e) == 2).unwrap();
        let g = Subgroup::new(
            Arc::clone(&x),
            vec![0, three_cycle, x.mul(three_cycle, three_cycle)],
        )
        .unwrap();
        let m = Subgroup::new(Arc::clone(&x), vec![0, transposition]).unwrap();
        derive_matched_pair(&x, &g, &m).unwrap()
    }

    #[test]
    fn both_algebras_pass_the_axioms_on_a_nonabelian_factorization() {
        let mp = s3_pair();
        let policy = CheckPolicy::default();
        let h = build_h(&mp);
        let hd = build_hdual(&mp);
        assert_eq!(h.dim(), 6);
        let rh = verify_hopf_axioms(&h, &policy);
        assert!(rh.all_passed(), "{rh}");
        let rd = verify_hopf_axioms(&hd, &policy);
        assert!(rd.all_passed(), "{rd}");
    }

    #[test]
    fn the_product_gate_follows_the_left_action() {
        let mp = s3_pair();
        let h = build_h(&mp);
        let n_g = mp.g_order();
        // (s⊗δ_u)(t⊗δ_v) is nonzero exactly when u = t▷v.
        for s in 0..mp.m_order() {
            for u in 0..n_g {
                for t in 0..mp.m_order() {
                    for v in 0..n_g {
                        let terms =
                            h.mul_basis(pair_index(n_g, s, u), pair_index(n_g, t, v));
                        if u == mp.act_left(t, v) {
                            assert_eq!(
                                terms,
                                &[(pair_index(n_g, mp.m_mul(s, t), v) as u32, Scalar::ONE)]
                            );
                        } else {
                            assert!(terms.is_empty());
                        }
                    }
                }
            }
        }
    }
}
