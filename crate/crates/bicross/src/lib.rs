//! Bicrossproduct Hopf algebras of a matched pair of finite groups: the
//! algebra built on functions on the first factor twisted by the second,
//! its dual, the self-duality isomorphisms induced by factor-reversing
//! automorphisms, the bilinear pairings they define, and the converse
//! reconstruction that recovers the automorphism from a basis-level
//! self-duality.

mod build;
mod converse;
mod pairing;
mod theta;

pub use build::{build_h, build_hdual};
pub use converse::{basis_selfduality_converse_check, ConverseOutcome};
pub use pairing::{
    canonical_pairing, duality_pairing, pairing_rank, verify_pairing_axioms, verify_selfduality,
};
pub use theta::{theta_tilde, theta_tilde_inverse, theta_tilde_on_dual, BicrossError};
