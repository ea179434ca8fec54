//! Reconstruction of the ambient group from a matched pair.

use std::sync::Arc;

use groups::{FiniteGroup, GroupIsomorphism};

use crate::matched_pair::MatchedPair;

/// Builds the double cross product group `G⋈M` on pairs `(u, s)` with
/// product `(u,s)(v,t) = (u·(s▷v), (s◁v)·t)`, plus the isomorphism back to
/// the ambient group sending `(u,s) ↦ u·s`.
///
/// Pair `(u, s)` sits at index `u·|M| + s`. The returned isomorphism is
/// verified exhaustively, which re-proves that the matched-pair actions
/// really reassemble the ambient multiplication.
pub fn double_cross_product(mp: &MatchedPair) -> (Arc<FiniteGroup>, GroupIsomorphism) {
    let ng = mp.g_order();
    let nm = mp.m_order();
    let n = ng * nm;
    let index = |u: usize, s: usize| u * nm + s;
    let mut cayley = vec![vec![0usize; n]; n];
    for u in 0..ng {
        for s in 0..nm {
            for v in 0..ng {
                for t in 0..nm {
                    let left = mp.g_mul(u, mp.act_left(s, v));
                    let right = mp.m_mul(mp.act_right(s, v), t);
                    cayley[index(u, s)][index(v, t)] = index(left, right);
                }
            }
        }
    }
    let group = FiniteGroup::from_cayley(format!("doublecross({})", mp.x().name()), cayley)
        .expect("matched-pair actions yield a group");
    let map: Vec<usize> = (0..n)
        .map(|i| {
            let (u, s) = (i / nm, i % nm);
            mp.x().mul(mp.g_parent(u), mp.m_parent(s))
        })
        .collect();
    let iso = GroupIsomorphism::new(Arc::clone(&group), Arc::clone(mp.x()), map)
        .expect("(u,s) ↦ u·s is an isomorphism onto the ambient group");
    (group, iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::exact_factorizations;
    use crate::matched_pair::derive_matched_pair;
    use groups::builtin_group;

    #[test]
    fn trivial_actions_reassemble_the_direct_product() {
        let x = builtin_group("product:cyclic:2,cyclic:3").unwrap();
        let pairs = exact_factorizations(&x);
        for (g, m) in &pairs {
            let mp = derive_matched_pair(&x, g, m).unwrap();
            let (dc, iso) = double_cross_product(&mp);
            assert_eq!(dc.order(), 6);
            iso.verify().unwrap();
        }
    }

    #[test]
    fn sym3_reassembles_from_its_nontrivial_factorization() {
        let x = builtin_group("sym:3").unwrap();
        let pairs = exact_factorizations(&x);
        let (g, m) = pairs
            .iter()
            .find(|(g, m)| g.order() == 3 && m.order() == 2)
            .unwrap();
        let mp = derive_matched_pair(&x, g, m).unwrap();
        let (dc, iso) = double_cross_product(&mp);
        assert_eq!(dc.order(), 6);
        assert!(!dc.is_abelian());
        iso.verify().unwrap();
    }

    #[test]
    fn pair_inverses_follow_the_action_formula() {
        // (u,s)⁻¹ = (s⁻¹▷u⁻¹, s⁻¹◁u⁻¹)
        let x = builtin_group("sym:3").unwrap();
        let pairs = exact_factorizations(&x);
        for (g, m) in pairs {
            let mp = derive_matched_pair(&x, &g, &m).unwrap();
            let (dc, _) = double_cross_product(&mp);
            let nm = mp.m_order();
            for u in 0..mp.g_order() {
                for s in 0..nm {
                    let si = mp.m_inv(s);
                    let ui = mp.g_inv(u);
                    let expected = mp.act_left(si, ui) * nm + mp.act_right(si, ui);
                    assert_eq!(dc.inv(u * nm + s), expected);
                }
            }
        }
    }
}
