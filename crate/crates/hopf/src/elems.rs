//! Sparse elements of tensor squares and cubes of one algebra, with
//! leg-wise products driven by the sparse product table.

use std::collections::BTreeMap;
use std::sync::Arc;

use exactalg::{AlgebraElement, BasisSpace, Scalar};

use crate::data::HopfAlgebraData;

/// Sparse element of `A ⊗ A`, keyed by leg indices.
pub type Elem2 = BTreeMap<(u32, u32), Scalar>;

/// Sparse element of `A ⊗ A ⊗ A`.
pub type Elem3 = BTreeMap<(u32, u32, u32), Scalar>;

pub fn add2(acc: &mut Elem2, key: (u32, u32), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_insert(Scalar::ZERO);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

pub fn add3(acc: &mut Elem3, key: (u32, u32, u32), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_insert(Scalar::ZERO);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

/// `1 ⊗ 1` in `A ⊗ A`.
pub fn unit2(h: &HopfAlgebraData) -> Elem2 {
    let mut out = Elem2::new();
    for (i, ci) in h.unit.iter() {
        for (j, cj) in h.unit.iter() {
            add2(&mut out, (i as u32, j as u32), ci * cj);
        }
    }
    out
}

/// The flip of tensor legs, `τ(a ⊗ b) = b ⊗ a`.
pub fn swap2(x: &Elem2) -> Elem2 {
    x.iter().map(|(&(a, b), &c)| ((b, a), c)).collect()
}

/// `Δe_i` as a sparse tensor-square element.
pub fn coproduct_of_basis(h: &HopfAlgebraData, i: usize) -> Elem2 {
    h.coproduct.row(i).iter().map(|&(k, c)| (k, c)).collect()
}

/// Leg-wise product in `A ⊗ A`. The right factor is grouped by its first
/// leg and joined against the sorted product rows of the left factor's
/// first legs, so only pairs whose first legs actually multiply to
/// something nonzero are visited.
pub fn mul2(h: &HopfAlgebraData, x: &Elem2, y: &Elem2) -> Elem2 {
    let y_terms: Vec<((u32, u32), Scalar)> = y.iter().map(|(&k, &c)| (k, c)).collect();
    let y_groups = group_by_first2(&y_terms);
    let mut out = Elem2::new();
    for (&(a, b), &cx) in x {
        let cols = h.product.row_cols(a as usize);
        let vals = h.product.row_vals(a as usize);
        let mut ci = 0;
        let mut gi = 0;
        while ci < cols.len() && gi < y_groups.len() {
            let (leg, start, end) = y_groups[gi];
            match cols[ci].cmp(&leg) {
                std::cmp::Ordering::Less => ci += 1,
                std::cmp::Ordering::Greater => gi += 1,
                std::cmp::Ordering::Equal => {
                    let first = &vals[ci];
                    for &((_, d), cy) in &y_terms[start..end] {
                        let second = h.product.product(b as usize, d as usize);
                        if second.is_empty() {
                            continue;
                        }
                        let scale = cx * cy;
                        for &(p, cp) in first {
                            for &(q, cq) in second {
                                add2(&mut out, (p, q), scale * cp * cq);
                            }
                        }
                    }
                    ci += 1;
                    gi += 1;
                }
            }
        }
    }
    out
}

/// Leg-wise product in `A ⊗ A ⊗ A`, organized like [`mul2`].
pub fn mul3(h: &HopfAlgebraData, x: &Elem3, y: &Elem3) -> Elem3 {
    let y_terms: Vec<((u32, u32, u32), Scalar)> = y.iter().map(|(&k, &c)| (k, c)).collect();
    let y_groups = group_by_first3(&y_terms);
    let mut out = Elem3::new();
    for (&(a, b, c), &cx) in x {
        let cols = h.product.row_cols(a as usize);
        let vals = h.product.row_vals(a as usize);
        let mut ci = 0;
        let mut gi = 0;
        while ci < cols.len() && gi < y_groups.len() {
            let (leg, start, end) = y_groups[gi];
            match cols[ci].cmp(&leg) {
                std::cmp::Ordering::Less => ci += 1,
                std::cmp::Ordering::Greater => gi += 1,
                std::cmp::Ordering::Equal => {
                    let first = &vals[ci];
                    for &((_, e, f), cy) in &y_terms[start..end] {
                        let second = h.product.product(b as usize, e as usize);
                        if second.is_empty() {
                            continue;
                        }
                        let third = h.product.product(c as usize, f as usize);
                        if third.is_empty() {
                            continue;
                        }
                        let scale = cx * cy;
                        for &(p, cp) in first {
                            for &(q, cq) in second {
                                for &(r, cr) in third {
                                    add3(&mut out, (p, q, r), scale * cp * cq * cr);
                                }
                            }
                        }
                    }
                    ci += 1;
                    gi += 1;
                }
            }
        }
    }
    out
}

fn group_by_first2(terms: &[((u32, u32), Scalar)]) -> Vec<(u32, usize, usize)> {
    let mut groups = Vec::new();
    let mut pos = 0;
    while pos < terms.len() {
        let leg = terms[pos].0 .0;
        let start = pos;
        while pos < terms.len() && terms[pos].0 .0 == leg {
            pos += 1;
        }
        groups.push((leg, start, pos));
    }
    groups
}

fn group_by_first3(terms: &[((u32, u32, u32), Scalar)]) -> Vec<(u32, usize, usize)> {
    let mut groups = Vec::new();
    let mut pos = 0;
    while pos < terms.len() {
        let leg = terms[pos].0 .0;
        let start = pos;
        while pos < terms.len() && terms[pos].0 .0 == leg {
            pos += 1;
        }
        groups.push((leg, start, pos));
    }
    groups
}

/// `(Δ ⊗ id)` applied to a tensor-square element.
pub fn coproduct_first_leg(h: &HopfAlgebraData, x: &Elem2) -> Elem3 {
    let mut out = Elem3::new();
    for (&(i, k), &c) in x {
        for &((a, b), c2) in h.coproduct.row(i as usize) {
            add3(&mut out, (a, b, k), c * c2);
        }
    }
    out
}

/// `(id ⊗ Δ)` applied to a tensor-square element.
pub fn coproduct_second_leg(h: &HopfAlgebraData, x: &Elem2) -> Elem3 {
    let mut out = Elem3::new();
    for (&(i, k), &c) in x {
        for &((a, b), c2) in h.coproduct.row(k as usize) {
            add3(&mut out, (i, a, b), c * c2);
        }
    }
    out
}

/// Embeds `Σ a⊗b` as `Σ a⊗b⊗1` in the cube.
pub fn lift12(x: &Elem2, unit: &AlgebraElement) -> Elem3 {
    let mut out = Elem3::new();
    for (&(a, b), &c) in x {
        for (u, cu) in unit.iter() {
            add3(&mut out, (a, b, u as u32), c * cu);
        }
    }
    out
}

/// Embeds `Σ a⊗b` as `Σ a⊗1⊗b` in the cube.
pub fn lift13(x: &Elem2, unit: &AlgebraElement) -> Elem3 {
    let mut out = Elem3::new();
    for (&(a, b), &c) in x {
        for (u, cu) in unit.iter() {
            add3(&mut out, (a, u as u32, b), c * cu);
        }
    }
    out
}

/// Embeds `Σ a⊗b` as `Σ 1⊗a⊗b` in the cube.
pub fn lift23(x: &Elem2, unit: &AlgebraElement) -> Elem3 {
    let mut out = Elem3::new();
    for (u, cu) in unit.iter() {
        for (&(a, b), &c) in x {
            add3(&mut out, (u as u32, a, b), c * cu);
        }
    }
    out
}

const DISPLAY_TERM_CAP: usize = 8;

/// Renders a sparse vector using the space's labels, truncated past a few
/// terms so counterexamples stay readable.
pub fn format_elem1(space: &Arc<BasisSpace>, terms: &BTreeMap<u32, Scalar>) -> String {
    let parts: Vec<String> = terms
        .iter()
        .take(DISPLAY_TERM_CAP)
        .map(|(&i, &c)| format_term(c, &format!("{}", space.label(i as usize))))
        .collect();
    finish_display(parts, terms.len())
}

pub fn format_elem2(space: &Arc<BasisSpace>, x: &Elem2) -> String {
    let parts: Vec<String> = x
        .iter()
        .take(DISPLAY_TERM_CAP)
        .map(|(&(a, b), &c)| {
            format_term(
                c,
                &format!("({})⊗({})", space.label(a as usize), space.label(b as usize)),
            )
        })
        .collect();
    finish_display(parts, x.len())
}

pub fn format_elem3(space: &Arc<BasisSpace>, x: &Elem3) -> String {
    let parts: Vec<String> = x
        .iter()
        .take(DISPLAY_TERM_CAP)
        .map(|(&(a, b, c), &s)| {
            format_term(
                s,
                &format!(
                    "({})⊗({})⊗({})",
                    space.label(a as usize),
                    space.label(b as usize),
                    space.label(c as usize)
                ),
            )
        })
        .collect();
    finish_display(parts, x.len())
}

fn format_term(c: Scalar, label: &str) -> String {
    if c.is_one() {
        label.to_string()
    } else {
        format!("{c}·{label}")
    }
}

fn finish_display(parts: Vec<String>, total: usize) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts.join(" + ");
    if total > DISPLAY_TERM_CAP {
        out.push_str(&format!(" + … ({} terms total)", total));
    }
    out
}
