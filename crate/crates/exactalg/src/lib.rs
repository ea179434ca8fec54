//! Exact sparse rational linear algebra over labeled tensor bases.
//!
//! Everything here is exact: scalars are reduced `i64` fractions that panic
//! loudly on overflow rather than rounding or wrapping, vectors and
//! matrices are sparse maps that never store zeros, and tensor indices are
//! leftmost-major everywhere. The crate also hosts the shared plumbing the
//! algebra crates build on: basis labels, pass/fail check reports, a frozen
//! seeded generator for sampled verification, and JSON codecs.

mod element;
mod json;
mod matrix;
mod minpoly;
mod poly;
mod report;
mod rng;
mod scalar;
mod space;

pub use element::AlgebraElement;
pub use json::{
    matrix_from_json, matrix_to_json, polynomial_from_json, polynomial_to_json,
    to_canonical_string, JsonFormatError,
};
pub use matrix::{apply, compose, tensor, LinalgError, LinearMap};
pub use minpoly::{cycle_counts, cycle_structure, minimal_polynomial, minimal_polynomial_krylov};
pub use poly::Polynomial;
pub use report::{Check, Counterexample, Report};
pub use rng::SplitMix64;
pub use scalar::{ParseScalarError, Scalar};
pub use space::{BasisLabel, BasisSpace};
