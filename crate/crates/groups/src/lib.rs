//! Finite groups represented by full Cayley tables.
//!
//! Everything downstream (factorizations, Hopf algebras, doubles) works over a
//! [`FiniteGroup`]: a canonical element indexing `0..n` with index `0` as the
//! identity, a dense multiplication table, and an inverse table. Groups are
//! built either from permutation generators ([`group_from_generators`]), from
//! the builtin catalog ([`builtin_group`]), or from explicit Cayley data
//! ([`FiniteGroup::from_cayley`]).
//!
//! The crate also provides subgroup enumeration ([`FiniteGroup::subgroups`])
//! and exhaustive isomorphism search ([`find_isomorphisms`]), both with
//! deterministic output ordering so that reports and exports are reproducible.

mod builtin;
mod generate;
mod group;
mod iso;
mod subgroup;

pub use builtin::{builtin_group, SpecError};
pub use generate::{compose, group_from_generators, group_from_generators_capped, DEFAULT_ORDER_CAP};
pub use group::{group_from_json, group_to_json, FiniteGroup, GroupError};
pub use iso::{find_isomorphisms, GroupIsomorphism};
pub use subgroup::Subgroup;
