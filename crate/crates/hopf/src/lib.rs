//! Finite-dimensional Hopf algebras as structure constants: construction
//! from groups, an exhaustive-or-sampled axiom verifier, duals, star
//! structures, morphism checks, sparse tensor-square/cube arithmetic, and
//! quasitriangularity.

mod data;
mod dual;
mod elems;
mod group_algebras;
mod json;
mod morphism;
mod quasi;
mod star;
mod table;
mod verify;

pub use data::{structure_diff, HopfAlgebraData};
pub use dual::dual_hopf;
pub use elems::{
    add2, add3, coproduct_first_leg, coproduct_of_basis, coproduct_second_leg, format_elem1,
    format_elem2, format_elem3, lift12, lift13, lift23, mul2, mul3, swap2, unit2, Elem2, Elem3,
};
pub use group_algebras::{function_hopf, group_hopf};
pub use json::{hopf_from_json, hopf_to_json, HopfJsonError};
pub use morphism::verify_hopf_morphism;
pub use quasi::verify_quasitriangular;
pub use star::{verify_star, HopfError};
pub use table::{CoproductTable, ProductTable};
pub use verify::{verify_antipode_involution, verify_hopf_axioms, CheckPolicy};
