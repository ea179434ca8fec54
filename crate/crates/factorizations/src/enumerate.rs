//! Enumeration of exact factorizations of a finite group.

use std::sync::Arc;

use groups::{FiniteGroup, Subgroup};

/// All ordered pairs `(G, M)` of subgroups with `|G|·|M| = |X|` and
/// `G ∩ M = {e}`. Those two conditions force the product map `G×M → X` to
/// be a bijection, so each pair is an exact factorization `X = G·M`.
///
/// Pairs are ordered by the subgroup enumeration order (size, then
/// elements), outer index `G` first, so the output is deterministic.
/// `(G, M)` and `(M, G)` are listed separately: the constructions downstream
/// are not symmetric in the two factors.
pub fn exact_factorizations(x: &Arc<FiniteGroup>) -> Vec<(Subgroup, Subgroup)> {
    let subs = x.subgroups(None);
    let mut out = Vec::new();
    for g in &subs {
        for m in &subs {
            if g.order() * m.order() != x.order() {
                continue;
            }
            if intersection_size(g, m) != 1 {
                continue;
            }
            out.push((g.clone(), m.clone()));
        }
    }
    out
}

/// Number of common elements of two subgroups of the same parent, counted
/// by merging their sorted element lists.
fn intersection_size(a: &Subgroup, b: &Subgroup) -> usize {
    let (xs, ys) = (a.elements(), b.elements());
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use groups::builtin_group;

    #[test]
    fn trivial_group_factors_once() {
        let x = builtin_group("cyclic:1").unwrap();
        let pairs = exact_factorizations(&x);
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].0.order(), 1);
        assert_eq!(pairs[0].1.order(), 1);
    }

    #[test]
    fn sym3_has_the_expected_eight_factorizations() {
        let x = builtin_group("sym:3").unwrap();
        let pairs = exact_factorizations(&x);
        // (trivial, S3), (S3, trivial), (Z3, each of three Z2), and the
        // three reversals.
        assert_eq!(pairs.len(), 8);
        let shape: Vec<(usize, usize)> =
            pairs.iter().map(|(g, m)| (g.order(), m.order())).collect();
        assert_eq!(shape.iter().filter(|&&p| p == (1, 6)).count(), 1);
        assert_eq!(shape.iter().filter(|&&p| p == (6, 1)).count(), 1);
        assert_eq!(shape.iter().filter(|&&p| p == (3, 2)).count(), 3);
        assert_eq!(shape.iter().filter(|&&p| p == (2, 3)).count(), 3);
    }

    #[test]
    fn coprime_order_groups_always_contain_a_sylow_factorization() {
        // |D6| = 12 = 4·3; a (Sylow-2, Sylow-3) pair must appear.
        let x = builtin_group("dihedral:6").unwrap();
        let pairs = exact_factorizations(&x);
        assert!(pairs.iter().any(|(g, m)| g.order() == 4 && m.order() == 3));
        assert!(pairs.iter().any(|(g, m)| g.order() == 3 && m.order() == 4));
    }

    #[test]
    fn enumeration_order_is_stable() {
        let x = builtin_group("sym:3").unwrap();
        let first = exact_factorizations(&x);
        let second = exact_factorizations(&x);
        let key = |pairs: &[(Subgroup, Subgroup)]| -> Vec<(Vec<usize>, Vec<usize>)> {
            pairs
                .iter()
                .map(|(g, m)| (g.elements().to_vec(), m.elements().to_vec()))
                .collect()
        };
        assert_eq!(key(&first), key(&second));
        // Sizes ascend in the outer (G) coordinate.
        let orders: Vec<usize> = first.iter().map(|(g, _)| g.order()).collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(orders, sorted);
    }
}
