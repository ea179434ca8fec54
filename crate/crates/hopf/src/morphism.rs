//! Checks that a linear map between two Hopf algebras respects all five
//! pieces of structure: unit, product, counit, coproduct, antipode.

use exactalg::{Check, Counterexample, LinearMap, Report, SplitMix64};

use crate::data::HopfAlgebraData;
use crate::elems::{add2, format_elem1, format_elem2, Elem2};
use crate::verify::CheckPolicy;

/// Verifies that `map: src → dst` is a morphism of Hopf algebras. The
/// pair-indexed product check follows the policy's exhaustive/sampled
/// split; everything else is exhaustive in the source basis.
pub fn verify_hopf_morphism(
    src: &HopfAlgebraData,
    dst: &HopfAlgebraData,
    map: &LinearMap,
    policy: &CheckPolicy,
) -> Report {
    assert_eq!(map.cols(), src.dim(), "morphism domain dimension");
    assert_eq!(map.rows(), dst.dim(), "morphism codomain dimension");
    let mut report = Report::new();
    report.push(check_unit(src, dst, map));
    report.push(check_product(src, dst, map, policy));
    report.push(check_counit(src, dst, map));
    report.push(check_coproduct(src, dst, map));
    report.push(check_antipode(src, dst, map));
    report
}

fn check_unit(src: &HopfAlgebraData, dst: &HopfAlgebraData, map: &LinearMap) -> Check {
    let name = "morphism-unit";
    let image = map.apply(&src.unit).expect("dimension checked");
    let expect = &dst.unit;
    if &image == expect {
        Check::pass(name)
    } else {
        Check::fail(
            name,
            Counterexample {
                indices: vec![],
                left: format!("{image:?}"),
                right: format!("{expect:?}"),
            },
        )
    }
}

fn check_product(
    src: &HopfAlgebraData,
    dst: &HopfAlgebraData,
    map: &LinearMap,
    policy: &CheckPolicy,
) -> Check {
    let name = "morphism-product";
    let d = src.dim();
    let eval = |i: usize, j: usize| -> Option<Counterexample> {
        let mut lhs = std::collections::BTreeMap::new();
        for &(p, c) in src.product.product(i, j) {
            for &(r, s) in map.column(p as usize) {
                add1(&mut lhs, r as u32, c * s);
            }
        }
        let mut rhs = std::collections::BTreeMap::new();
        for &(a, ca) in map.column(i) {
            for &(b, cb) in map.column(j) {
                for &(p, cp) in dst.product.product(a, b) {
                    add1(&mut rhs, p, ca * cb * cp);
                }
            }
        }
        if lhs == rhs {
            None
        } else {
            Some(Counterexample {
                indices: vec![i, j],
                left: format_elem1(&dst.space, &lhs),
                right: format_elem1(&dst.space, &rhs),
            })
        }
    };
    if d <= policy.exhaustive_dim_cap || (d as u128).pow(2) <= policy.sample_size as u128 {
        for i in 0..d {
            for j in 0..d {
                if let Some(cx) = eval(i, j) {
                    return Check::fail(name, cx);
                }
            }
        }
    } else {
        let mut rng = SplitMix64::new(policy.seed);
        for _ in 0..policy.sample_size {
            let i = rng.next_below(d as u64) as usize;
            let j = rng.next_below(d as u64) as usize;
            if let Some(cx) = eval(i, j) {
                return Check::fail(name, cx);
            }
        }
    }
    Check::pass(name)
}

fn check_counit(src: &HopfAlgebraData, dst: &HopfAlgebraData, map: &LinearMap) -> Check {
    let name = "morphism-counit";
    for i in 0..src.dim() {
        let mut lhs = exactalg::Scalar::ZERO;
        for &(r, s) in map.column(i) {
            lhs += s * dst.counit[r];
        }
        let rhs = src.counit[i];
        if lhs != rhs {
            return Check::fail(
                name,
                Counterexample {
                    indices: vec![i],
                    left: lhs.to_string(),
                    right: rhs.to_string(),
                },
            );
        }
    }
    Check::pass(name)
}

fn check_coproduct(src: &HopfAlgebraData, dst: &HopfAlgebraData, map: &LinearMap) -> Check {
    let name = "morphism-coproduct";
    for i in 0..src.dim() {
        // (map ⊗ map)(Δ_src e_i)
        let mut lhs = Elem2::new();
        for &((j, k), c) in src.coproduct.row(i) {
            for &(a, ca) in map.column(j as usize) {
                for &(b, cb) in map.column(k as usize) {
                    add2(&mut lhs, (a as u32, b as u32), c * ca * cb);
                }
            }
        }
        // Δ_dst(map e_i)
        let mut rhs = Elem2::new();
        for &(m, cm) in map.column(i) {
            for &(jk, c) in dst.coproduct.row(m) {
                add2(&mut rhs, jk, cm * c);
            }
        }
        if lhs != rhs {
            return Check::fail(
                name,
                Counterexample {
                    indices: vec![i],
                    left: format_elem2(&dst.space, &lhs),
                    right: format_elem2(&dst.space, &rhs),
                },
            );
        }
    }
    Check::pass(name)
}

fn check_antipode(src: &HopfAlgebraData, dst: &HopfAlgebraData, map: &LinearMap) -> Check {
    let name = "morphism-antipode";
    for i in 0..src.dim() {
        let mut lhs = std::collections::BTreeMap::new();
        for &(m, cm) in src.antipode.column(i) {
            for &(r, s) in map.column(m) {
                add1(&mut lhs, r as u32, cm * s);
            }
        }
        let mut rhs = std::collections::BTreeMap::new();
        for &(m, cm) in map.column(i) {
            for &(r, s) in dst.antipode.column(m) {
                add1(&mut rhs, r as u32, cm * s);
            }
        }
        if lhs != rhs {
            return Check::fail(
                name,
                Counterexample {
                    indices: vec![i],
                    left: format_elem1(&dst.space, &lhs),
                    right: format_elem1(&dst.space, &rhs),
                },
            );
        }
    }
    Check::pass(name)
}

fn add1(
    acc: &mut std::collections::BTreeMap<u32, exactalg::Scalar>,
    key: u32,
    c: exactalg::Scalar,
) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_insert(exactalg::Scalar::ZERO);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}
