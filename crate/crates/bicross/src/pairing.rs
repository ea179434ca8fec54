//! Bilinear Hopf pairings: the evaluation pairing between `H` and `H*`,
//! and the self-duality pairings on `H` induced by factor-reversing
//! automorphisms.
//!
//! A pairing is stored as a covector on the tensor square (a `1 × d²`
//! [`LinearMap`]), so nondegeneracy is an exact rank query on the reshaped
//! `d × d` matrix.

use std::sync::Arc;

use exactalg::{BasisSpace, Check, Counterexample, LinearMap, Report, Scalar};
use factorizations::MatchedPair;
use groups::GroupIsomorphism;
use hopf::{verify_hopf_morphism, CheckPolicy, HopfAlgebraData};

use crate::build::{build_h, build_hdual, h_space, hdual_space, pair_index};
use crate::theta::{theta_local, theta_tilde, theta_tilde_inverse, theta_tilde_on_dual, BicrossError};

/// The self-duality pairing on `H ⊗ H` induced by a factor-reversing `θ`:
/// `⟨s⊗δ_u, t⊗δ_v⟩ = [s = θ(t▷v)]·[u = θ(t◁v)]`.
///
/// Returned as a covector on the tensor square of `H`'s space. Each right
/// basis vector pairs to 1 with exactly one left basis vector, so the
/// covector has exactly `dim H` unit entries.
pub fn duality_pairing(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
) -> Result<LinearMap, BicrossError> {
    let tl = theta_local(mp, theta)?;
    let (n_m, n_g) = (mp.m_order(), mp.g_order());
    let d = n_m * n_g;
    let hsp = h_space(mp);
    let domain = BasisSpace::tensor(vec![Arc::clone(&hsp), hsp]);
    let mut triplets = Vec::with_capacity(d);
    for t in 0..n_m {
        for v in 0..n_g {
            let s = tl.g_to_m[mp.act_left(t, v)];
            let u = tl.m_to_g[mp.act_right(t, v)];
            let left = pair_index(n_g, s, u);
            let right = pair_index(n_g, t, v);
            triplets.push((0, left * d + right, Scalar::ONE));
        }
    }
    Ok(LinearMap::from_triplets(domain, BasisSpace::opaque(1), triplets))
}

/// The evaluation pairing `H ⊗ H* → k`:
/// `⟨t⊗δ_v, δ_s⊗u⟩ = [s = t]·[u = v]`, matching each basis vector of `H`
/// with its namesake in `H*`.
pub fn canonical_pairing(mp: &MatchedPair) -> LinearMap {
    let hsp = h_space(mp);
    let dsp = hdual_space(mp);
    let d = hsp.dim();
    let domain = BasisSpace::tensor(vec![hsp, dsp]);
    LinearMap::from_triplets(
        domain,
        BasisSpace::opaque(1),
        (0..d).map(|i| (0, i * d + i, Scalar::ONE)),
    )
}

/// Exact rank of a pairing covector, computed on the reshaped
/// `|left| × |right|` matrix. Full rank means the pairing is nondegenerate.
pub fn pairing_rank(pairing: &LinearMap) -> usize {
    assert_eq!(pairing.rows(), 1, "pairing must be a covector");
    let factors = pairing.domain().factors();
    assert_eq!(factors.len(), 2, "pairing domain must be a two-factor tensor space");
    let (d_left, d_right) = (factors[0].dim(), factors[1].dim());
    let mut triplets = Vec::with_capacity(pairing.nnz());
    for c in 0..pairing.cols() {
        for &(_, s) in pairing.column(c) {
            triplets.push((c / d_right, c % d_right, s));
        }
    }
    LinearMap::from_triplets(BasisSpace::opaque(d_right), BasisSpace::opaque(d_left), triplets)
        .rank()
}

/// Locates the first domain index where two maps of equal shape disagree.
fn first_column_difference(got: &LinearMap, want: &LinearMap) -> Option<Counterexample> {
    (0..got.cols()).find_map(|c| {
        if got.column(c) == want.column(c) {
            None
        } else {
            Some(Counterexample {
                indices: vec![c],
                left: format!("{:?}", got.column(c)),
                right: format!("{:?}", want.column(c)),
            })
        }
    })
}

/// Dense view of a pairing covector as a `|left| × |right|` scalar grid.
fn pairing_grid(left_dim: usize, right_dim: usize, pairing: &LinearMap) -> Vec<Vec<Scalar>> {
    assert_eq!(pairing.rows(), 1, "pairing must be a covector");
    assert_eq!(
        pairing.cols(),
        left_dim * right_dim,
        "pairing domain must match the two algebras"
    );
    let mut grid = vec![vec![Scalar::ZERO; right_dim]; left_dim];
    for c in 0..pairing.cols() {
        for &(_, s) in pairing.column(c) {
            grid[c / right_dim][c % right_dim] = s;
        }
    }
    grid
}

/// Verifies the Hopf pairing laws for a bilinear form `⟨ , ⟩` between two
/// Hopf algebras (exhaustively over basis tuples):
///
/// * `pairing-product-law`: `⟨ab, c⟩ = Σ ⟨a, c₍₁₎⟩⟨b, c₍₂₎⟩`
/// * `pairing-coproduct-law`: `⟨a, bc⟩ = Σ ⟨a₍₁₎, b⟩⟨a₍₂₎, c⟩`
/// * `pairing-antipode-law`: `⟨Sa, b⟩ = ⟨a, Sb⟩`
/// * `pairing-unit-law`: `⟨1, b⟩ = ε(b)`
/// * `pairing-counit-law`: `⟨a, 1⟩ = ε(a)`
pub fn verify_pairing_axioms(
    left: &HopfAlgebraData,
    right: &HopfAlgebraData,
    pairing: &LinearMap,
) -> Report {
    let (dl, dr) = (left.dim(), right.dim());
    let grid = pairing_grid(dl, dr, pairing);
    let mut report = Report::new();

    let mut product_law = Check::pass("pairing-product-law");
    'product: for a in 0..dl {
        for b in 0..dl {
            for c in 0..dr {
                let mut lhs = Scalar::ZERO;
                for &(k, coef) in left.mul_basis(a, b) {
                    lhs += coef * grid[k as usize][c];
                }
                let mut rhs = Scalar::ZERO;
                for &((c1, c2), coef) in right.coproduct.row(c) {
                    rhs += coef * grid[a][c1 as usize] * grid[b][c2 as usize];
                }
                if lhs != rhs {
                    product_law = Check::fail(
                        "pairing-product-law",
                        Counterexample {
                            indices: vec![a, b, c],
                            left: lhs.to_string(),
                            right: rhs.to_string(),
                        },
                    );
                    break 'product;
                }
            }
        }
    }
    report.push(product_law);

    let mut coproduct_law = Check::pass("pairing-coproduct-law");
    'coproduct: for a in 0..dl {
        for b in 0..dr {
            for c in 0..dr {
                let mut lhs = Scalar::ZERO;
                for &(k, coef) in right.mul_basis(b, c) {
                    lhs += coef * grid[a][k as usize];
                }
                let mut rhs = Scalar::ZERO;
                for &((a1, a2), coef) in left.coproduct.row(a) {
                    rhs += coef * grid[a1 as usize][b] * grid[a2 as usize][c];
                }
                if lhs != rhs {
                    coproduct_law = Check::fail(
                        "pairing-coproduct-law",
                        Counterexample {
                            indices: vec![a, b, c],
                            left: lhs.to_string(),
                            right: rhs.to_string(),
                        },
                    );
                    break 'coproduct;
                }
            }
        }
    }
    report.push(coproduct_law);

    let mut antipode_law = Check::pass("pairing-antipode-law");
    'antipode: for a in 0..dl {
        for b in 0..dr {
            let mut lhs = Scalar::ZERO;
            for &(k, coef) in left.antipode.column(a) {
                lhs += coef * grid[k][b];
            }
            let mut rhs = Scalar::ZERO;
            for &(k, coef) in right.antipode.column(b) {
                rhs += coef * grid[a][k];
            }
            if lhs != rhs {
                antipode_law = Check::fail(
                    "pairing-antipode-law",
                    Counterexample {
                        indices: vec![a, b],
                        left: lhs.to_string(),
                        right: rhs.to_string(),
                    },
                );
                break 'antipode;
            }
        }
    }
    report.push(antipode_law);

    let mut unit_law = Check::pass("pairing-unit-law");
    for b in 0..dr {
        let mut lhs = Scalar::ZERO;
        for (i, coef) in left.unit.iter() {
            lhs += coef * grid[i][b];
        }
        let rhs = right.counit[b];
        if lhs != rhs {
            unit_law = Check::fail(
                "pairing-unit-law",
                Counterexample {
                    indices: vec![b],
                    left: lhs.to_string(),
                    right: rhs.to_string(),
                },
            );
            break;
        }
    }
    report.push(unit_law);

    let mut counit_law = Check::pass("pairing-counit-law");
    for a in 0..dl {
        let mut lhs = Scalar::ZERO;
        for (i, coef) in right.unit.iter() {
            lhs += coef * grid[a][i];
        }
        let rhs = left.counit[a];
        if lhs != rhs {
            counit_law = Check::fail(
                "pairing-counit-law",
                Counterexample {
                    indices: vec![a],
                    left: lhs.to_string(),
                    right: rhs.to_string(),
                },
            );
            break;
        }
    }
    report.push(counit_law);

    report
}

/// The full self-duality report for one factor-reversing automorphism:
/// the five Hopf-morphism checks for `θ̃: H → H*` and for its dual-side
/// companion `H* → H`, the closed-form inverse, the transport of the
/// evaluation pairing, and the Hopf-pairing laws plus nondegeneracy of the
/// induced bilinear form on `H`.
pub fn verify_selfduality(
    mp: &MatchedPair,
    theta: &GroupIsomorphism,
    policy: &CheckPolicy,
) -> Result<Report, BicrossError> {
    let h = build_h(mp);
    let hd = build_hdual(mp);
    let tt = theta_tilde(mp, theta)?;
    let ttd = theta_tilde_on_dual(mp, theta)?;
    let tt_inv = theta_tilde_inverse(mp, theta)?;

    let mut report = verify_hopf_morphism(&h, &hd, &tt, policy);

    let dual_side = verify_hopf_morphism(&hd, &h, &ttd, policy);
    report.push(if dual_side.all_passed() {
        Check::pass("dual-side-morphism")
    } else {
        let failed: Vec<&str> = dual_side.failures().map(|c| c.name()).collect();
        Check::fail(
            "dual-side-morphism",
            Counterexample {
                indices: vec![],
                left: format!("failed checks: {}", failed.join(", ")),
                right: "all five morphism checks".into(),
            },
        )
    });

    let round_h = tt_inv.compose(&tt).expect("dimensions agree by construction");
    let round_d = tt.compose(&tt_inv).expect("dimensions agree by construction");
    let identity_ok = round_h == LinearMap::identity(Arc::clone(&h.space))
        && round_d == LinearMap::identity(Arc::clone(&hd.space));
    report.push(if identity_ok {
        Check::pass("inverse-composes-to-identity")
    } else {
        Check::fail(
            "inverse-composes-to-identity",
            first_column_difference(&round_h, &LinearMap::identity(Arc::clone(&h.space)))
                .or_else(|| {
                    first_column_difference(&round_d, &LinearMap::identity(Arc::clone(&hd.space)))
                })
                .expect("unequal maps differ in some column"),
        )
    });

    // ⟨θ̃a, θ̃h⟩ = ⟨h, a⟩: transporting the evaluation pairing through the
    // two companion maps flips its slots.
    let eval = canonical_pairing(mp);
    let transported = eval
        .compose(&ttd.tensor(&tt))
        .expect("dimensions agree by construction");
    let d = h.dim();
    let flipped = LinearMap::from_triplets(
        BasisSpace::tensor(vec![Arc::clone(&hd.space), Arc::clone(&h.space)]),
        BasisSpace::opaque(1),
        (0..d).map(|i| (0, i * d + i, Scalar::ONE)),
    );
    report.push(if transported == flipped {
        Check::pass("pairing-transport")
    } else {
        Check::fail(
            "pairing-transport",
            first_column_difference(&transported, &flipped)
                .expect("unequal maps differ in some column"),
        )
    });

    let pairing = duality_pairing(mp, theta)?;
    report.extend(verify_pairing_axioms(&h, &h, &pairing));
    let rank = pairing_rank(&pairing);
    report.push(if rank == d {
        Check::pass("pairing-full-rank")
    } else {
        Check::fail(
            "pairing-full-rank",
            Counterexample {
                indices: vec![],
                left: rank.to_string(),
                right: d.to_string(),
            },
        )
    });

    Ok(report)
}
