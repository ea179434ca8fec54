//! End-to-end checks of the group-derived Hopf algebras across the whole
//! builtin catalog up to order 12, plus dual and fault-injection coverage.

use hopf::{
    dual_hopf, function_hopf, group_hopf, hopf_from_json, hopf_to_json, structure_diff,
    verify_antipode_involution, verify_hopf_axioms, verify_star, CheckPolicy,
};

use exactalg::to_canonical_string;
use groups::builtin_group;

fn catalog_up_to_order_12() -> Vec<&'static str> {
    vec![
        "cyclic:1",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "cyclic:7",
        "cyclic:8",
        "cyclic:9",
        "cyclic:10",
        "cyclic:11",
        "cyclic:12",
        "dihedral:1",
        "dihedral:2",
        "dihedral:3",
        "dihedral:4",
        "dihedral:5",
        "dihedral:6",
        "sym:1",
        "sym:2",
        "sym:3",
        "product:cyclic:2,cyclic:2",
        "product:cyclic:2,cyclic:4",
        "product:cyclic:2,cyclic:6",
        "product:cyclic:3,cyclic:3",
        "product:cyclic:2,sym:3",
    ]
}

#[test]
fn every_builtin_group_algebra_and_function_algebra_passes_all_axioms() {
    let policy = CheckPolicy::default();
    for spec in catalog_up_to_order_12() {
        let x = builtin_group(spec).unwrap();
        assert!(x.order() <= 12, "{spec} exceeds the catalog bound");

        let kx = group_hopf(&x);
        let report = verify_hopf_axioms(&kx, &policy);
        assert!(report.all_passed(), "group algebra of {spec}:\n{report}");
        assert!(verify_antipode_involution(&kx).passed(), "{spec} inversion squared");
        assert!(verify_star(&kx, &policy).unwrap().all_passed(), "{spec} star");

        let fx = function_hopf(&x);
        let report = verify_hopf_axioms(&fx, &policy);
        assert!(report.all_passed(), "function algebra of {spec}:\n{report}");
        assert!(verify_antipode_involution(&fx).passed(), "{spec} function inversion squared");
        assert!(verify_star(&fx, &policy).unwrap().all_passed(), "{spec} function star");
    }
}

#[test]
fn duality_swaps_the_two_constructions_and_preserves_axioms() {
    let policy = CheckPolicy::default();
    for spec in ["cyclic:5", "sym:3", "dihedral:6", "product:cyclic:2,cyclic:4"] {
        let x = builtin_group(spec).unwrap();
        let kx = group_hopf(&x);
        let fx = function_hopf(&x);
        assert_eq!(structure_diff(&dual_hopf(&kx), &fx), None, "{spec}");
        assert_eq!(structure_diff(&dual_hopf(&fx), &kx), None, "{spec}");
        assert!(verify_hopf_axioms(&dual_hopf(&kx), &policy).all_passed(), "{spec}");
        assert_eq!(structure_diff(&dual_hopf(&dual_hopf(&kx)), &kx), None, "{spec}");
    }
}

#[test]
fn single_corrupted_antipode_entry_is_pinpointed_by_basis_index() {
    let x = builtin_group("dihedral:4").unwrap();
    let mut h = group_hopf(&x);
    // Swap the antipode images of two non-inverse elements.
    let mut images: Vec<usize> = (0..h.dim()).map(|i| x.inv(i)).collect();
    let a = 1;
    let b = (0..h.dim()).find(|&i| x.inv(i) != a && i != a && x.inv(a) != i).unwrap();
    images.swap(a, b);
    h.antipode = exactalg::LinearMap::permutation(h.space.clone(), &images);

    let report = verify_hopf_axioms(&h, &CheckPolicy::default());
    let left = report.find("antipode-law-left").unwrap();
    assert!(!left.passed());
    let witness = left.counterexample().unwrap();
    assert!(witness.indices == vec![a] || witness.indices == vec![b]);
}

#[test]
fn exported_json_is_canonical_and_reimportable() {
    let x = builtin_group("product:cyclic:2,sym:3").unwrap();
    let h = function_hopf(&x);
    let text = to_canonical_string(&hopf_to_json(&h));
    let again = hopf_from_json(&text).unwrap();
    assert_eq!(structure_diff(&h, &again), None);
    assert_eq!(to_canonical_string(&hopf_to_json(&again)), text);
}
