//! Group construction from permutation generators.

use std::collections::HashMap;
use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError};

/// Default cap on the closure size for [`group_from_generators`].
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// Left-action composition of image tables: `compose(p, q)` applies `q`
/// first, then `p`, so `compose(p, q)[i] = p[q[i]]`.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

/// Closes a set of permutation generators into a group with the default
/// order cap. See [`group_from_generators_capped`].
pub fn group_from_generators(
    degree: usize,
    generators: &[Vec<usize>],
) -> Result<Arc<FiniteGroup>, GroupError> {
    group_from_generators_capped(degree, generators, DEFAULT_ORDER_CAP)
}

/// Closes a set of permutation generators (image tables on `0..degree`) into
/// a [`FiniteGroup`].
///
/// Element order is canonical: the identity comes first, then the closure is
/// explored breadth-first, multiplying each known element on the right by the
/// generators in their listed order and appending images not seen before.
/// The resulting indexing is therefore a pure function of `(degree,
/// generators)`, which keeps Cayley-table exports stable across runs.
pub fn group_from_generators_capped(
    degree: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<Arc<FiniteGroup>, GroupError> {
    for (index, gen) in generators.iter().enumerate() {
        let mut seen = vec![false; degree];
        if gen.len() != degree {
            return Err(GroupError::NotAPermutation { index, degree });
        }
        for &image in gen {
            if image >= degree || seen[image] {
                return Err(GroupError::NotAPermutation { index, degree });
            }
            seen[image] = true;
        }
    }

    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index_of: HashMap<Vec<usize>, usize> = HashMap::new();
    index_of.insert(identity, 0);

    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        for gen in generators {
            let product = compose(&current, gen);
            if !index_of.contains_key(&product) {
                if elements.len() >= cap {
                    return Err(GroupError::OrderCapExceeded { cap });
                }
                index_of.insert(product.clone(), elements.len());
                elements.push(product);
            }
        }
        next += 1;
    }

    let n = elements.len();
    let mut cayley = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            let product = compose(&elements[i], &elements[j]);
            cayley[i * n + j] = index_of[&product] as u32;
        }
    }
    let name = format!("closure(degree={degree}, generators={})", generators.len());
    FiniteGroup::from_flat(name, n, cayley)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_three_cycle_generates_z3() {
        let g = group_from_generators(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn empty_generator_list_gives_trivial_group() {
        let g = group_from_generators(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn six_point_pair_of_generators_closes_to_order_36() {
        // Two degree-6 permutations with cycle shapes (3,2) and (2,3).
        let g = group_from_generators(6, &[vec![1, 2, 0, 4, 3, 5], vec![1, 0, 2, 4, 5, 3]]).unwrap();
        assert_eq!(g.order(), 36);
    }

    #[test]
    fn cap_is_enforced() {
        let err = group_from_generators_capped(6, &[vec![1, 2, 0, 4, 3, 5], vec![1, 0, 2, 4, 5, 3]], 10)
            .unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { cap: 10 }));
    }

    #[test]
    fn generator_validation_rejects_repeats() {
        let err = group_from_generators(3, &[vec![0, 0, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotAPermutation { index: 0, degree: 3 }));
    }
}
