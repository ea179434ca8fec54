//! End-to-end checks on the order-36 fixture: the permutation group
//! generated by a (3,2)-shaped and a (2,3)-shaped degree-6 permutation,
//! factored into two cyclic subgroups of order 6.

use std::sync::Arc;

use factorizations::{
    derive_matched_pair, double_cross_product, exact_factorizations, find_factor_reversing,
    verify_matched_pair, MatchedPair,
};
use groups::{group_from_generators, FiniteGroup, Subgroup};

fn fixture() -> (Arc<FiniteGroup>, MatchedPair, Vec<usize>, Vec<usize>) {
    let x = group_from_generators(6, &[vec![1, 2, 0, 4, 3, 5], vec![1, 0, 2, 4, 5, 3]]).unwrap();
    // Power sequences of the two generators (parent indices).
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
    let g = Subgroup::new(x.clone(), g_pow.clone()).unwrap();
    let m = Subgroup::new(x.clone(), m_pow.clone()).unwrap();
    let mp = derive_matched_pair(&x, &g, &m).unwrap();
    // Translate power exponent → subgroup-local index.
    let g_local: Vec<usize> = g_pow.iter().map(|&p| g.local_index(p).unwrap()).collect();
    let m_local: Vec<usize> = m_pow.iter().map(|&p| m.local_index(p).unwrap()).collect();
    (x, mp, g_local, m_local)
}

#[test]
fn the_fixture_is_an_exact_factorization_with_verified_actions() {
    let (x, mp, _, _) = fixture();
    assert_eq!(x.order(), 36);
    assert_eq!(mp.g_order(), 6);
    assert_eq!(mp.m_order(), 6);
    let report = verify_matched_pair(&mp);
    assert!(report.all_passed(), "{report}");
}

#[test]
fn generator_actions_match_the_known_values() {
    let (_, mp, g_local, m_local) = fixture();
    // In power coordinates: m¹ ▷ g¹ = g⁵ and m¹ ◁ g¹ = m⁵.
    assert_eq!(mp.act_left(m_local[1], g_local[1]), g_local[5]);
    assert_eq!(mp.act_right(m_local[1], g_local[1]), m_local[5]);
}

#[test]
fn actions_follow_the_parity_rule_in_power_coordinates() {
    let (_, mp, g_local, m_local) = fixture();
    let g_exp_of = |local: usize| g_local.iter().position(|&l| l == local).unwrap();
    let m_exp_of = |local: usize| m_local.iter().position(|&l| l == local).unwrap();
    for s in 0..6usize {
        for u in 0..6usize {
            let left = g_exp_of(mp.act_left(m_local[s], g_local[u]));
            let right = m_exp_of(mp.act_right(m_local[s], g_local[u]));
            // s▷u = u for even s and −u for odd s; s◁u = s for even u and
            // −s for odd u (all exponents mod 6).
            let expect_left = if s % 2 == 0 { u } else { (6 - u) % 6 };
            let expect_right = if u % 2 == 0 { s } else { (6 - s) % 6 };
            assert_eq!(left, expect_left, "left action at s={s}, u={u}");
            assert_eq!(right, expect_right, "right action at s={s}, u={u}");
        }
    }
}

#[test]
fn double_cross_product_reassembles_the_fixture() {
    let (x, mp, _, _) = fixture();
    let (dc, iso) = double_cross_product(&mp);
    assert_eq!(dc.order(), 36);
    iso.verify().unwrap();
    assert_eq!(iso.target().order(), x.order());
    // The inverse law (u,s)⁻¹ = (s⁻¹▷u⁻¹, s⁻¹◁u⁻¹) holds across the group.
    let nm = mp.m_order();
    for u in 0..mp.g_order() {
        for s in 0..nm {
            let (si, ui) = (mp.m_inv(s), mp.g_inv(u));
            let expected = mp.act_left(si, ui) * nm + mp.act_right(si, ui);
            assert_eq!(dc.inv(u * nm + s), expected);
        }
    }
}

#[test]
fn exactly_four_automorphisms_reverse_the_factors() {
    let (_, mp, _, _) = fixture();
    let reversing = find_factor_reversing(&mp);
    assert_eq!(reversing.len(), 4);
    // One of them swaps the two generators outright — the coordinate swap
    // of the ambient product group.
    assert!(reversing
        .iter()
        .any(|theta| theta.apply(1) == 2 && theta.apply(2) == 1));
    for theta in &reversing {
        theta.verify().unwrap();
    }
}

#[test]
fn every_factorization_of_small_groups_yields_verified_actions() {
    for spec in ["sym:3", "dihedral:4", "product:cyclic:2,cyclic:2", "cyclic:8"] {
        let x = groups::builtin_group(spec).unwrap();
        for (g, m) in exact_factorizations(&x) {
            let mp = derive_matched_pair(&x, &g, &m).unwrap();
            let report = verify_matched_pair(&mp);
            assert!(report.all_passed(), "{spec}: {report}");
        }
    }
}
