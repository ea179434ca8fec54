//! Star-structure checks over the rationals.
//!
//! Antilinearity has no content over ℚ, so the verifier covers exactly the
//! conjugation-free consequences of a star structure: involutivity, the
//! anti-algebra law, and compatibility with the coproduct.

use std::collections::BTreeMap;

use exactalg::{Check, Counterexample, Report, Scalar, SplitMix64};

use crate::data::HopfAlgebraData;
use crate::elems::{add2, format_elem1, format_elem2, Elem2};
use crate::verify::CheckPolicy;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("the algebra carries no star structure")]
    MissingStar,
}

/// Verifies the three rational star identities: `*∘* = id`,
/// `(ab)* = b*a*`, and `Δ∘* = (*⊗*)∘Δ`. The pair-indexed anti-algebra
/// check follows the policy's exhaustive/sampled split; the others are
/// linear in the dimension and always exhaustive.
pub fn verify_star(h: &HopfAlgebraData, policy: &CheckPolicy) -> Result<Report, HopfError> {
    let star = h.star.as_ref().ok_or(HopfError::MissingStar)?;
    let mut report = Report::new();

    let involution = 'inv: {
        let name = "star-involution";
        for i in 0..h.dim() {
            let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
            for &(m, cm) in star.column(i) {
                for &(r, cr) in star.column(m) {
                    add_scalar(&mut acc, r as u32, cm * cr);
                }
            }
            let mut expect = BTreeMap::new();
            expect.insert(i as u32, Scalar::ONE);
            if acc != expect {
                break 'inv Check::fail(
                    name,
                    Counterexample {
                        indices: vec![i],
                        left: format_elem1(&h.space, &acc),
                        right: format_elem1(&h.space, &expect),
                    },
                );
            }
        }
        Check::pass(name)
    };
    report.push(involution);

    report.push(check_anti_multiplicativity(h, star, policy));
    report.push(check_coproduct_compatibility(h, star));
    Ok(report)
}

fn add_scalar(acc: &mut BTreeMap<u32, Scalar>, key: u32, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = acc.entry(key).or_insert(Scalar::ZERO);
    *slot += c;
    if slot.is_zero() {
        acc.remove(&key);
    }
}

fn check_anti_multiplicativity(
    h: &HopfAlgebraData,
    star: &exactalg::LinearMap,
    policy: &CheckPolicy,
) -> Check {
    let name = "star-anti-multiplicativity";
    let d = h.dim();
    let eval = |i: usize, j: usize| -> Option<Counterexample> {
        let mut lhs: BTreeMap<u32, Scalar> = BTreeMap::new();
        for &(p, c) in h.product.product(i, j) {
            for &(q, cs) in star.column(p as usize) {
                add_scalar(&mut lhs, q as u32, c * cs);
            }
        }
        let mut rhs: BTreeMap<u32, Scalar> = BTreeMap::new();
        for &(a, ca) in star.column(j) {
            for &(b, cb) in star.column(i) {
                for &(p, cp) in h.product.product(a, b) {
                    add_scalar(&mut rhs, p, ca * cb * cp);
                }
            }
        }
        if lhs == rhs {
            None
        } else {
            Some(Counterexample {
                indices: vec![i, j],
                left: format_elem1(&h.space, &lhs),
                right: format_elem1(&h.space, &rhs),
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

fn check_coproduct_compatibility(h: &HopfAlgebraData, star: &exactalg::LinearMap) -> Check {
    let name = "star-coproduct-compatibility";
    for i in 0..h.dim() {
        let mut lhs = Elem2::new();
        for &(m, cm) in star.column(i) {
            for &(jk, c) in h.coproduct.row(m) {
                add2(&mut lhs, jk, cm * c);
            }
        }
        let mut rhs = Elem2::new();
        for &((j, k), c) in h.coproduct.row(i) {
            for &(a, ca) in star.column(j as usize) {
                for &(b, cb) in star.column(k as usize) {
                    add2(&mut rhs, (a as u32, b as u32), c * ca * cb);
                }
            }
        }
        if lhs != rhs {
            return Check::fail(
                name,
                Counterexample {
                    indices: vec![i],
                    left: format_elem2(&h.space, &lhs),
                    right: format_elem2(&h.space, &rhs),
                },
            );
        }
    }
    Check::pass(name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebras::{function_hopf, group_hopf};
    use exactalg::LinearMap;
    use groups::builtin_group;
    use std::sync::Arc;

    #[test]
    fn inversion_star_on_group_algebras_passes() {
        for spec in ["cyclic:6", "dihedral:6", "sym:3"] {
            let x = builtin_group(spec).unwrap();
            let report = verify_star(&group_hopf(&x), &CheckPolicy::default()).unwrap();
            assert!(report.all_passed(), "{spec}: {report}");
            let report = verify_star(&function_hopf(&x), &CheckPolicy::default()).unwrap();
            assert!(report.all_passed(), "functions on {spec}: {report}");
        }
    }

    #[test]
    fn a_missing_star_is_its_own_error() {
        let x = builtin_group("cyclic:2").unwrap();
        let mut h = group_hopf(&x);
        h.star = None;
        assert_eq!(verify_star(&h, &CheckPolicy::default()), Err(HopfError::MissingStar));
    }

    #[test]
    fn the_identity_star_fails_on_a_noncommutative_group_algebra() {
        // On kS3 the identity map is an involution and coproduct-compatible
        // but not anti-multiplicative, and the report says exactly that.
        let x = builtin_group("sym:3").unwrap();
        let mut h = group_hopf(&x);
        h.star = Some(LinearMap::identity(Arc::clone(&h.space)));
        let report = verify_star(&h, &CheckPolicy::default()).unwrap();
        assert!(report.find("star-involution").unwrap().passed());
        assert!(!report.find("star-anti-multiplicativity").unwrap().passed());
        assert!(report.find("star-coproduct-compatibility").unwrap().passed());
    }
}
