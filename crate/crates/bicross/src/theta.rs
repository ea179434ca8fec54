//! The basis isomorphism `H → H*` induced by an automorphism that swaps the
//! two factors of the underlying group factorization.

use std::sync::Arc;

use exactalg::{LinearMap, Scalar};
use factorizations::MatchedPair;
use groups::GroupIsomorphism;

use crate::build::{h_space, hdual_space, pair_index};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BicrossError {
    /// The supplied automorphism does not send `G` into `M` and `M` into
    /// `G`, so it induces no basis isomorphism.
    #[error("automorphism does not reverse the factors: {0}")]
    NotFactorReversing(String),
    /// The supplied map is not a basis-to-basis bijection between the two
    /// algebras' labeled spaces.
    #[error("not a basis bijection of the required shape: {0}")]
    ShapeError(String),
}

/// The restrictions of a factor-reversing automorphism to the two factors,
/// as maps between subgroup-local indices.
pub(crate) struct ThetaLocal {
    /// `θ` restricted to `G`, landing in `M`.
    pub g_to_m: Vec<usize>,
    /// `θ` restricted to `M`, landing in `G`.
    pub m_to_g: Vec<usize>,
}

pub(crate) fn theta_local(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
) -> Result<ThetaLocal, BicrossError> {
    let x = mp.x();
    if !Arc::ptr_eq(theta.source(), x) || !Arc::ptr_eq(theta.target(), x) {
        return Err(BicrossError::NotFactorReversing(
            "map is not an automorphism of the factored group".into(),
        ));
    }
    let mut g_to_m = Vec::with_capacity(mp.g_order());
    for u in 0..mp.g_order() {
        let image = theta.apply(mp.g_parent(u));
        match mp.m().local_index(image) {
            Some(s) => g_to_m.push(s),
            None => {
                return Err(BicrossError::NotFactorReversing(format!(
                    "image of the first-factor element at local index {u} lies outside the second factor"
                )))
            }
        }
    }
    let mut m_to_g = Vec::with_capacity(mp.m_order());
    for s in 0..mp.m_order() {
        let image = theta.apply(mp.m_parent(s));
        match mp.g().local_index(image) {
            Some(u) => m_to_g.push(u),
            None => {
                return Err(BicrossError::NotFactorReversing(format!(
                    "image of the second-factor element at local index {s} lies outside the first factor"
                )))
            }
        }
    }
    Ok(ThetaLocal { g_to_m, m_to_g })
}

/// The basis isomorphism `θ̃: H → H*`,
/// `θ̃(s ⊗ δ_u) = δ_{θ(s▷u)} ⊗ θ(s◁u)`.
///
/// Requires `θ` to reverse the factors; the returned map is then a
/// bijective basis permutation (verify it as a Hopf morphism with
/// [`hopf::verify_hopf_morphism`]).
pub fn theta_tilde(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
) -> Result<LinearMap, BicrossError> {
    let tl = theta_local(mp, theta)?;
    let n_g = mp.g_order();
    Ok(LinearMap::from_basis_images(h_space(mp), hdual_space(mp), |i| {
        let (s, u) = (i / n_g, i % n_g);
        let image =
            pair_index(n_g, tl.g_to_m[mp.act_left(s, u)], tl.m_to_g[mp.act_right(s, u)]);
        vec![(image, Scalar::ONE)]
    }))
}

/// The companion basis isomorphism `θ̃: H* → H` built from the same `θ`,
/// `θ̃(δ_s ⊗ u) = θ(s▷u) ⊗ δ_{θ(s◁u)}`.
pub fn theta_tilde_on_dual(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
) -> Result<LinearMap, BicrossError> {
    let tl = theta_local(mp, theta)?;
    let n_g = mp.g_order();
    Ok(LinearMap::from_basis_images(hdual_space(mp), h_space(mp), |i| {
        let (s, u) = (i / n_g, i % n_g);
        let image =
            pair_index(n_g, tl.g_to_m[mp.act_left(s, u)], tl.m_to_g[mp.act_right(s, u)]);
        vec![(image, Scalar::ONE)]
    }))
}

/// The inverse of [`theta_tilde`], given in closed form by
/// `θ̃⁻¹(δ_s ⊗ u) = θ⁻¹(s▷u) ⊗ δ_{θ⁻¹(s◁u)}` — the dual-side companion map
/// of `θ⁻¹`.
pub fn theta_tilde_inverse(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
) -> Result<LinearMap, BicrossError> {
    theta_tilde_on_dual(mp, &theta.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use factorizations::{derive_matched_pair, find_factor_reversing};
    use groups::{builtin_group, Subgroup};

    #[test]
    fn a_factor_preserving_automorphism_is_rejected() {
        // The Klein four-group split into its two coordinate factors; the
        // identity automorphism preserves them instead of swapping them.
        let x = builtin_group("product:cyclic:2,cyclic:2").unwrap();
        let g = Subgroup::new(Arc::clone(&x), vec![0, 1]).unwrap();
        let m = Subgroup::new(Arc::clone(&x), vec![0, 2]).unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        let identity =
            GroupIsomorphism::new(Arc::clone(&x), Arc::clone(&x), (0..4).collect()).unwrap();
        match theta_tilde(&mp, &identity) {
            Err(BicrossError::NotFactorReversing(_)) => {}
            other => panic!("expected a factor-reversal error, got {other:?}"),
        }
    }

    #[test]
    fn the_coordinate_swap_of_a_square_product_induces_a_basis_bijection() {
        let x = builtin_group("product:cyclic:2,cyclic:2").unwrap();
        let g = Subgroup::new(Arc::clone(&x), vec![0, 1]).unwrap();
        let m = Subgroup::new(Arc::clone(&x), vec![0, 2]).unwrap();
        let mp = derive_matched_pair(&x, &g, &m).unwrap();
        let reversing = find_factor_reversing(&mp);
        assert!(!reversing.is_empty());
        for theta in &reversing {
            let map = theta_tilde(&mp, theta).unwrap();
            assert!(map.as_permutation().is_some());
            let inv = theta_tilde_inverse(&mp, theta).unwrap();
            let round = inv.compose(&map).unwrap();
            assert_eq!(round, LinearMap::identity(h_space(&mp)));
        }
    }
}
