//! Shared fixture: the order-36 permutation group generated by a pair of
//! order-6 elements whose cyclic subgroups intersect trivially, together
//! with local-index dictionaries keyed by generator powers.

use std::sync::Arc;

use factorizations::{derive_matched_pair, MatchedPair};
use groups::{group_from_generators, FiniteGroup, Subgroup};

/// Builds the group, its matched pair, and two dictionaries translating
/// "k-th power of the generator" to the subgroup-local index used by the
/// algebras (local indices sort by parent element, not by power).
pub fn order36_fixture() -> (Arc<FiniteGroup>, MatchedPair, Vec<usize>, Vec<usize>) {
    let x = group_from_generators(6, &[vec![1, 2, 0, 4, 3, 5], vec![1, 0, 2, 4, 5, 3]]).unwrap();
    let powers = |gen: usize| -> Vec<usize> {
        let mut out = vec![0usize];
        let mut cur = gen;
        while cur != 0 {
            out.push(cur);
            cur = x.mul(cur, gen);
        }
        out
    };
    let g_pow = powers(1);
    let m_pow = powers(2);
    let g = Subgroup::new(Arc::clone(&x), g_pow.clone()).unwrap();
    let m = Subgroup::new(Arc::clone(&x), m_pow.clone()).unwrap();
    let mp = derive_matched_pair(&x, &g, &m).unwrap();
    let g_local: Vec<usize> = g_pow.iter().map(|&p| g.local_index(p).unwrap()).collect();
    let m_local: Vec<usize> = m_pow.iter().map(|&p| m.local_index(p).unwrap()).collect();
    (x, mp, g_local, m_local)
}
