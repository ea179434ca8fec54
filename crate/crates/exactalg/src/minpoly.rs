//! Minimal polynomials and permutation cycle structure.

use crate::element::AlgebraElement;
use crate::matrix::{LinalgError, LinearMap};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// The monic minimal polynomial of a square map over the rationals.
///
/// Permutation matrices take a combinatorial path — the least common
/// multiple of `λ^m − 1` over the cycle lengths `m` — while everything else
/// goes through exact Krylov iteration ([`minimal_polynomial_krylov`]). The
/// two paths agree on permutations; tests pin that down.
pub fn minimal_polynomial(a: &LinearMap) -> Polynomial {
    assert_eq!(a.rows(), a.cols(), "minimal polynomial requires a square map");
    if let Some(image) = a.as_permutation() {
        let mut lengths = cycle_lengths(&image);
        lengths.dedup();
        return lengths
            .into_iter()
            .map(Polynomial::cycle)
            .fold(Polynomial::one(), |acc, p| acc.lcm(&p));
    }
    minimal_polynomial_krylov(a)
}

/// The general Krylov path: annihilators of the all-ones vector and then of
/// standard basis vectors, combined by least common multiple until the
/// result kills every basis vector.
pub fn minimal_polynomial_krylov(a: &LinearMap) -> Polynomial {
    assert_eq!(a.rows(), a.cols(), "minimal polynomial requires a square map");
    let n = a.cols();
    if n == 0 {
        return Polynomial::one();
    }
    let space = a.domain().clone();
    let ones =
        AlgebraElement::from_terms(space.clone(), (0..n).map(|i| (i, Scalar::ONE)));
    let mut min = vector_annihilator(a, &ones);
    for i in 0..n {
        if min.degree() == Some(n) {
            break;
        }
        let e = AlgebraElement::basis_vector(space.clone(), i);
        if min.eval_apply(a, &e).expect("square map").is_zero() {
            continue;
        }
        min = min.lcm(&vector_annihilator(a, &e));
    }
    min
}

/// Smallest monic `p` with `p(A)·v = 0`, found by reducing the Krylov
/// sequence `v, Av, A²v, …` with exact Gaussian elimination while tracking
/// how each reduced vector combines the powers.
fn vector_annihilator(a: &LinearMap, v: &AlgebraElement) -> Polynomial {
    let n = a.cols();
    // (reduced dense vector with unit pivot, pivot index, power combination)
    let mut reduced: Vec<(Vec<Scalar>, usize, Vec<Scalar>)> = Vec::new();
    let mut current = v.clone();
    let mut power = 0usize;
    loop {
        let mut w = vec![Scalar::ZERO; n];
        for (i, c) in current.iter() {
            w[i] = c;
        }
        let mut combo = vec![Scalar::ZERO; power + 1];
        combo[power] = Scalar::ONE;
        for (rv, piv, rc) in &reduced {
            let f = w[*piv];
            if f.is_zero() {
                continue;
            }
            for i in 0..n {
                if !rv[i].is_zero() {
                    w[i] -= f * rv[i];
                }
            }
            for (i, &c) in rc.iter().enumerate() {
                combo[i] -= f * c;
            }
        }
        match w.iter().position(|c| !c.is_zero()) {
            None => return Polynomial::from_coeffs(combo),
            Some(piv) => {
                let inv = w[piv].recip();
                for entry in &mut w {
                    *entry *= inv;
                }
                for entry in &mut combo {
                    *entry *= inv;
                }
                reduced.push((w, piv, combo));
                current = a.apply(&current).expect("square map");
                power += 1;
                assert!(power <= n, "Krylov iteration exceeded the dimension");
            }
        }
    }
}

/// Sorted multiset of cycle lengths of a permutation matrix.
pub fn cycle_structure(a: &LinearMap) -> Result<Vec<usize>, LinalgError> {
    let image = a.as_permutation().ok_or_else(|| LinalgError::NotPermutation {
        context: format!(
            "{}×{} map with {} entries is not a 0/1 permutation matrix",
            a.rows(),
            a.cols(),
            a.nnz()
        ),
    })?;
    Ok(cycle_lengths(&image))
}

fn cycle_lengths(image: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; image.len()];
    let mut lengths = Vec::new();
    for start in 0..image.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            len += 1;
            cur = image[cur];
        }
        lengths.push(len);
    }
    lengths.sort();
    lengths
}

/// Collapses a sorted cycle-length list into `(length, count)` pairs.
pub fn cycle_counts(lengths: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &len in lengths {
        match out.last_mut() {
            Some((l, c)) if *l == len => *c += 1,
            _ => out.push((len, 1)),
        }
    }
    out
}
