//! Exact group factorizations `X = G·M`, matched-pair actions, and the
//! double cross product reconstruction, plus the search for automorphisms
//! that swap the two factors.

mod double;
mod enumerate;
mod json;
mod matched_pair;
mod reversing;

pub use double::double_cross_product;
pub use enumerate::exact_factorizations;
pub use json::{matched_pair_from_json, matched_pair_to_json, MatchedPairJsonError};
pub use matched_pair::{derive_matched_pair, verify_matched_pair, FactorizationError, MatchedPair};
pub use reversing::find_factor_reversing;
