//! Integration tests exercising generation, builtin specs, and isomorphism
//! search together on the order-36 permutation group used throughout the
//! workspace.

use std::collections::BTreeSet;
use std::sync::Arc;

use groups::{builtin_group, find_isomorphisms, group_from_generators, FiniteGroup};

/// Degree-6 permutation with cycle shape (3, 2).
const GEN_G: [usize; 6] = [1, 2, 0, 4, 3, 5];
/// Degree-6 permutation with cycle shape (2, 3).
const GEN_M: [usize; 6] = [1, 0, 2, 4, 5, 3];

fn order_36_group() -> Arc<FiniteGroup> {
    group_from_generators(6, &[GEN_G.to_vec(), GEN_M.to_vec()]).unwrap()
}

fn powers(group: &FiniteGroup, x: usize) -> Vec<usize> {
    let mut out = vec![0];
    let mut cur = x;
    while cur != 0 {
        out.push(cur);
        cur = group.mul(cur, x);
    }
    out
}

#[test]
fn bfs_indexing_of_the_order_36_group_is_stable() {
    let g = order_36_group();
    assert_eq!(g.order(), 36);
    // The two generators land at indices 1 and 2, and their power sequences
    // occupy these exact slots in the breadth-first enumeration.
    assert_eq!(powers(&g, 1), vec![0, 1, 3, 7, 15, 12]);
    assert_eq!(powers(&g, 2), vec![0, 2, 6, 14, 25, 9]);
}

#[test]
fn generated_group_matches_builtin_product_presentation() {
    let generated = order_36_group();
    let builtin = builtin_group("product:dihedral:3,dihedral:3").unwrap();
    assert_eq!(generated.order_profile(), builtin.order_profile());
    let isos = find_isomorphisms(&generated, &builtin, None);
    assert!(!isos.is_empty());
    isos[0].verify().unwrap();
}

#[test]
fn generator_order_changes_indexing_but_not_the_group() {
    let forward = order_36_group();
    let reversed = group_from_generators(6, &[GEN_M.to_vec(), GEN_G.to_vec()]).unwrap();
    assert_eq!(reversed.order(), 36);
    assert!(!find_isomorphisms(&forward, &reversed, None).is_empty());
}

#[test]
fn automorphism_group_of_the_order_36_group_has_order_72() {
    let g = order_36_group();
    let autos = find_isomorphisms(&g, &g, None);
    assert_eq!(autos.len(), 72);
}

#[test]
fn eight_automorphisms_preserve_or_swap_the_two_cyclic_factors() {
    let g = order_36_group();
    let a: BTreeSet<usize> = powers(&g, 1).into_iter().collect();
    let b: BTreeSet<usize> = powers(&g, 2).into_iter().collect();

    let preserving = |x: usize, im: usize| {
        (!a.contains(&x) || a.contains(&im)) && (!b.contains(&x) || b.contains(&im))
    };
    let swapping = |x: usize, im: usize| {
        (!a.contains(&x) || b.contains(&im)) && (!b.contains(&x) || a.contains(&im))
    };

    let mut found = find_isomorphisms(&g, &g, Some(&preserving));
    assert_eq!(found.len(), 4);
    let swapped = find_isomorphisms(&g, &g, Some(&swapping));
    assert_eq!(swapped.len(), 4);
    found.extend(swapped);

    // The eight maps close under composition into a non-abelian group of
    // order 8 with exactly five involutions (so it is dihedral, not
    // quaternion).
    let tables: BTreeSet<Vec<usize>> = found.iter().map(|iso| iso.map().to_vec()).collect();
    assert_eq!(tables.len(), 8);
    let mut involutions = 0;
    let mut abelian = true;
    for p in &found {
        for q in &found {
            let comp = p.then(q);
            assert!(tables.contains(comp.map()));
            if p.then(q).map() != q.then(p).map() {
                abelian = false;
            }
        }
        let square = p.then(p);
        let is_identity = (0..36).all(|x| p.apply(x) == x);
        if !is_identity && (0..36).all(|x| square.apply(x) == x) {
            involutions += 1;
        }
    }
    assert!(!abelian);
    assert_eq!(involutions, 5);
}

#[test]
fn subgroup_census_of_the_order_36_group() {
    let g = order_36_group();
    let all = g.subgroups(None);
    // Every subgroup order divides 36, both trivial subgroups appear, and
    // the enumeration is sorted by (order, elements).
    assert_eq!(all.first().unwrap().order(), 1);
    assert_eq!(all.last().unwrap().order(), 36);
    for s in &all {
        assert_eq!(36 % s.order(), 0);
    }
    let sizes: Vec<usize> = all.iter().map(|s| s.order()).collect();
    let mut sorted = sizes.clone();
    sorted.sort();
    assert_eq!(sizes, sorted);

    let order_6 = g.subgroups(Some(6));
    assert!(order_6.iter().all(|s| s.order() == 6));
    // The twelve order-6 elements pair up into six cyclic order-6 subgroups.
    let cyclic6 = order_6.iter().filter(|s| s.is_cyclic()).count();
    assert_eq!(cyclic6, 6);
}
