//! Search for automorphisms that swap the two factors of a factorization.

use groups::{find_isomorphisms, GroupIsomorphism};

use crate::matched_pair::MatchedPair;

/// All automorphisms `θ` of the ambient group with `θ(G) ⊆ M` and
/// `θ(M) ⊆ G`.
///
/// The membership constraint is threaded into the isomorphism search and
/// checked as each image is determined, so the search prunes hard instead
/// of enumerating the full automorphism group. When `|G| ≠ |M|` no map can
/// satisfy the constraint and the search itself comes back empty — there is
/// deliberately no size shortcut, so emptiness is always a proved result.
pub fn find_factor_reversing(mp: &MatchedPair) -> Vec<GroupIsomorphism> {
    let x = mp.x();
    let n = x.order();
    let mut in_g = vec![false; n];
    let mut in_m = vec![false; n];
    for &e in mp.g().elements() {
        in_g[e] = true;
    }
    for &e in mp.m().elements() {
        in_m[e] = true;
    }
    let constraint = move |elem: usize, image: usize| {
        (!in_g[elem] || in_m[image]) && (!in_m[elem] || in_g[image])
    };
    find_isomorphisms(x, x, Some(&constraint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::exact_factorizations;
    use crate::matched_pair::derive_matched_pair;
    use groups::builtin_group;

    #[test]
    fn unequal_factor_sizes_admit_no_reversal() {
        let x = builtin_group("sym:3").unwrap();
        let (g, m) = exact_factorizations(&x)
            .into_iter()
            .find(|(g, m)| g.order() == 3 && m.order() == 2)
            .unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        assert!(find_factor_reversing(&mp).is_empty());
    }

    #[test]
    fn reversing_maps_actually_reverse() {
        // In Z2×Z2 every pair of distinct order-2 subgroups factors the
        // group, and swapping the coordinates reverses the factors.
        let x = builtin_group("product:cyclic:2,cyclic:2").unwrap();
        let (g, m) = exact_factorizations(&x)
            .into_iter()
            .find(|(g, m)| g.order() == 2 && m.order() == 2)
            .unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        let reversing = find_factor_reversing(&mp);
        assert!(!reversing.is_empty());
        for theta in &reversing {
            theta.verify().unwrap();
            for &e in mp.g().elements() {
                assert!(mp.m().local_index(theta.apply(e)).is_some());
            }
            for &e in mp.m().elements() {
                assert!(mp.g().local_index(theta.apply(e)).is_some());
            }
        }
    }

    #[test]
    fn composing_two_reversals_preserves_the_factors() {
        let x = builtin_group("product:cyclic:2,cyclic:2").unwrap();
        let (g, m) = exact_factorizations(&x)
            .into_iter()
            .find(|(g, m)| g.order() == 2 && m.order() == 2)
            .unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        let reversing = find_factor_reversing(&mp);
        for a in &reversing {
            for b in &reversing {
                let c = a.then(b);
                for &e in mp.g().elements() {
                    assert!(mp.g().local_index(c.apply(e)).is_some());
                }
                for &e in mp.m().elements() {
                    assert!(mp.m().local_index(c.apply(e)).is_some());
                }
            }
        }
    }
}
