//! Matched pairs of group actions arising from exact factorizations.
//!
//! When a group `X` factors exactly as `X = G·M` (every element is uniquely
//! a product `u·s` with `u ∈ G`, `s ∈ M`), refactoring the reversed product
//! `s·u` defines two actions, written `s▷u` (an action of `M` on `G`) and
//! `s◁u` (an action of `G` on `M`), via `s·u = (s▷u)·(s◁u)`. These tables
//! drive everything downstream.

use std::sync::Arc;

use exactalg::{Check, Counterexample, Report};
use groups::{FiniteGroup, Subgroup};

#[derive(Debug, thiserror::Error)]
pub enum FactorizationError {
    #[error("subgroups come from a different parent group")]
    MismatchedParent,
    #[error("|G|·|M| = {product} does not match |X| = {expected}")]
    WrongSizes { product: usize, expected: usize },
    #[error("factors overlap in {overlap} elements beyond the identity")]
    OverlappingFactors { overlap: usize },
    #[error("action table has wrong shape or out-of-range entries: {0}")]
    MalformedTable(String),
}

/// An exact factorization `X = G·M` together with the matched-pair action
/// tables, indexed by subgroup-local indices (row `s ∈ M`, column `u ∈ G`).
#[derive(Clone)]
pub struct MatchedPair {
    x: Arc<FiniteGroup>,
    g: Subgroup,
    m: Subgroup,
    /// `act_left[s][u] = s▷u` as a G-local index.
    act_left: Vec<Vec<usize>>,
    /// `act_right[s][u] = s◁u` as an M-local index.
    act_right: Vec<Vec<usize>>,
    /// For each parent element `x`, the unique `(u, s)` with `x = u·s`.
    gm_factor: Vec<(usize, usize)>,
    /// For each parent element `x`, the unique `(s, u)` with `x = s·u`.
    mg_factor: Vec<(usize, usize)>,
}

/// Checks exactness and produces both factor tables; shared by the
/// constructors.
fn factor_tables(
    x: &Arc<FiniteGroup>,
    g: &Subgroup,
    m: &Subgroup,
) -> Result<(Vec<(usize, usize)>, Vec<(usize, usize)>), FactorizationError> {
    if !Arc::ptr_eq(g.parent(), x) || !Arc::ptr_eq(m.parent(), x) {
        return Err(FactorizationError::MismatchedParent);
    }
    if g.order() * m.order() != x.order() {
        return Err(FactorizationError::WrongSizes {
            product: g.order() * m.order(),
            expected: x.order(),
        });
    }
    let overlap = g
        .elements()
        .iter()
        .filter(|&&e| m.local_index(e).is_some())
        .count();
    if overlap != 1 {
        return Err(FactorizationError::OverlappingFactors { overlap: overlap - 1 });
    }
    // Size and trivial intersection force both product maps to be
    // bijections; filling the tables double-checks that.
    let mut gm = vec![(usize::MAX, usize::MAX); x.order()];
    let mut mg = vec![(usize::MAX, usize::MAX); x.order()];
    for u in 0..g.order() {
        for s in 0..m.order() {
            let gu = g.element(u);
            let ms = m.element(s);
            gm[x.mul(gu, ms)] = (u, s);
            mg[x.mul(ms, gu)] = (s, u);
        }
    }
    debug_assert!(gm.iter().all(|&(u, _)| u != usize::MAX));
    debug_assert!(mg.iter().all(|&(s, _)| s != usize::MAX));
    Ok((gm, mg))
}

/// Derives the matched-pair actions of an exact factorization by factoring
/// each reversed product `s·u` through the `G×M` bijection.
pub fn derive_matched_pair(
    x: &Arc<FiniteGroup>,
    g: &Subgroup,
    m: &Subgroup,
) -> Result<MatchedPair, FactorizationError> {
    let (gm_factor, mg_factor) = factor_tables(x, g, m)?;
    let mut act_left = vec![vec![0usize; g.order()]; m.order()];
    let mut act_right = vec![vec![0usize; g.order()]; m.order()];
    for s in 0..m.order() {
        for u in 0..g.order() {
            let product = x.mul(m.element(s), g.element(u));
            let (lu, ls) = gm_factor[product];
            act_left[s][u] = lu;
            act_right[s][u] = ls;
        }
    }
    Ok(MatchedPair {
        x: Arc::clone(x),
        g: g.clone(),
        m: m.clone(),
        act_left,
        act_right,
        gm_factor,
        mg_factor,
    })
}

impl MatchedPair {
    /// Wraps explicit action tables (for externally supplied actions and
    /// fault-injection tests). Exactness of the factorization and table
    /// shapes are validated; the matched-pair laws are *not* — run
    /// [`verify_matched_pair`] for that.
    pub fn from_tables(
        x: &Arc<FiniteGroup>,
        g: &Subgroup,
        m: &Subgroup,
        act_left: Vec<Vec<usize>>,
        act_right: Vec<Vec<usize>>,
    ) -> Result<MatchedPair, FactorizationError> {
        let (gm_factor, mg_factor) = factor_tables(x, g, m)?;
        for (name, table, range) in [
            ("act_left", &act_left, g.order()),
            ("act_right", &act_right, m.order()),
        ] {
            if table.len() != m.order() {
                return Err(FactorizationError::MalformedTable(format!(
                    "{name} must have one row per element of M"
                )));
            }
            for row in table {
                if row.len() != g.order() || row.iter().any(|&e| e >= range) {
                    return Err(FactorizationError::MalformedTable(format!(
                        "{name} rows must have one in-range entry per element of G"
                    )));
                }
            }
        }
        Ok(MatchedPair {
            x: Arc::clone(x),
            g: g.clone(),
            m: m.clone(),
            act_left,
            act_right,
            gm_factor,
            mg_factor,
        })
    }

    pub fn x(&self) -> &Arc<FiniteGroup> {
        &self.x
    }

    pub fn g(&self) -> &Subgroup {
        &self.g
    }

    pub fn m(&self) -> &Subgroup {
        &self.m
    }

    pub fn g_order(&self) -> usize {
        self.g.order()
    }

    pub fn m_order(&self) -> usize {
        self.m.order()
    }

    /// `s▷u` (G-local).
    #[inline]
    pub fn act_left(&self, s: usize, u: usize) -> usize {
        self.act_left[s][u]
    }

    /// `s◁u` (M-local).
    #[inline]
    pub fn act_right(&self, s: usize, u: usize) -> usize {
        self.act_right[s][u]
    }

    #[inline]
    pub fn g_mul(&self, a: usize, b: usize) -> usize {
        self.g.mul_local(a, b)
    }

    #[inline]
    pub fn g_inv(&self, a: usize) -> usize {
        self.g.inv_local(a)
    }

    #[inline]
    pub fn m_mul(&self, a: usize, b: usize) -> usize {
        self.m.mul_local(a, b)
    }

    #[inline]
    pub fn m_inv(&self, a: usize) -> usize {
        self.m.inv_local(a)
    }

    /// Parent index of a G-local element.
    #[inline]
    pub fn g_parent(&self, u: usize) -> usize {
        self.g.element(u)
    }

    /// Parent index of an M-local element.
    #[inline]
    pub fn m_parent(&self, s: usize) -> usize {
        self.m.element(s)
    }

    /// The unique `(u, s)` with `x = u·s`.
    #[inline]
    pub fn factor_gm(&self, x: usize) -> (usize, usize) {
        self.gm_factor[x]
    }

    /// The unique `(s, u)` with `x = s·u`.
    #[inline]
    pub fn factor_mg(&self, x: usize) -> (usize, usize) {
        self.mg_factor[x]
    }

    pub fn act_left_table(&self) -> &[Vec<usize>] {
        &self.act_left
    }

    pub fn act_right_table(&self) -> &[Vec<usize>] {
        &self.act_right
    }

    /// Corrupt one `act_left` entry (testing hook for fault injection).
    pub fn with_corrupted_left_entry(mut self, s: usize, u: usize, value: usize) -> MatchedPair {
        assert!(value < self.g.order());
        self.act_left[s][u] = value;
        self
    }
}

impl std::fmt::Debug for MatchedPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MatchedPair(|X| = {}, |G| = {}, |M| = {})",
            self.x.order(),
            self.g.order(),
            self.m.order()
        )
    }
}

/// Exhaustively checks the defining identity and all eight matched-pair
/// laws. Failures are reported with the first counterexample, never
/// panicked on — corrupt tables are data here.
pub fn verify_matched_pair(mp: &MatchedPair) -> Report {
    let ng = mp.g_order();
    let nm = mp.m_order();
    let mut report = Report::new();

    // s·u = (s▷u)·(s◁u) as elements of X.
    let mut witness = None;
    'outer_def: for s in 0..nm {
        for u in 0..ng {
            let lhs = mp.x.mul(mp.m_parent(s), mp.g_parent(u));
            let rhs = mp
                .x
                .mul(mp.g_parent(mp.act_left(s, u)), mp.m_parent(mp.act_right(s, u)));
            if lhs != rhs {
                witness = Some(Counterexample {
                    indices: vec![s, u],
                    left: format!("s·u = x{lhs}"),
                    right: format!("(s▷u)·(s◁u) = x{rhs}"),
                });
                break 'outer_def;
            }
        }
    }
    report.push(Check::from_witness("defining-identity", witness));

    // s◁e = s
    let mut witness = None;
    for s in 0..nm {
        if mp.act_right(s, 0) != s {
            witness = Some(Counterexample {
                indices: vec![s],
                left: format!("s◁e = m{}", mp.act_right(s, 0)),
                right: format!("s = m{s}"),
            });
            break;
        }
    }
    report.push(Check::from_witness("right-action-unit", witness));

    // (s◁u)◁v = s◁(uv)
    let mut witness = None;
    'outer_rc: for s in 0..nm {
        for u in 0..ng {
            for v in 0..ng {
                let lhs = mp.act_right(mp.act_right(s, u), v);
                let rhs = mp.act_right(s, mp.g_mul(u, v));
                if lhs != rhs {
                    witness = Some(Counterexample {
                        indices: vec![s, u, v],
                        left: format!("(s◁u)◁v = m{lhs}"),
                        right: format!("s◁(uv) = m{rhs}"),
                    });
                    break 'outer_rc;
                }
            }
        }
    }
    report.push(Check::from_witness("right-action-composition", witness));

    // e◁u = e
    let mut witness = None;
    for u in 0..ng {
        if mp.act_right(0, u) != 0 {
            witness = Some(Counterexample {
                indices: vec![u],
                left: format!("e◁u = m{}", mp.act_right(0, u)),
                right: "e = m0".into(),
            });
            break;
        }
    }
    report.push(Check::from_witness("right-action-absorbs-unit", witness));

    // (st)◁u = (s◁(t▷u))·(t◁u)
    let mut witness = None;
    'outer_rp: for s in 0..nm {
        for t in 0..nm {
            for u in 0..ng {
                let lhs = mp.act_right(mp.m_mul(s, t), u);
                let rhs = mp.m_mul(mp.act_right(s, mp.act_left(t, u)), mp.act_right(t, u));
                if lhs != rhs {
                    witness = Some(Counterexample {
                        indices: vec![s, t, u],
                        left: format!("(st)◁u = m{lhs}"),
                        right: format!("(s◁(t▷u))(t◁u) = m{rhs}"),
                    });
                    break 'outer_rp;
                }
            }
        }
    }
    report.push(Check::from_witness("right-action-product-rule", witness));

    // e▷u = u
    let mut witness = None;
    for u in 0..ng {
        if mp.act_left(0, u) != u {
            witness = Some(Counterexample {
                indices: vec![u],
                left: format!("e▷u = g{}", mp.act_left(0, u)),
                right: format!("u = g{u}"),
            });
            break;
        }
    }
    report.push(Check::from_witness("left-action-unit", witness));

    // s▷(t▷u) = (st)▷u
    let mut witness = None;
    'outer_lc: for s in 0..nm {
        for t in 0..nm {
            for u in 0..ng {
                let lhs = mp.act_left(s, mp.act_left(t, u));
                let rhs = mp.act_left(mp.m_mul(s, t), u);
                if lhs != rhs {
                    witness = Some(Counterexample {
                        indices: vec![s, t, u],
                        left: format!("s▷(t▷u) = g{lhs}"),
                        right: format!("(st)▷u = g{rhs}"),
                    });
                    break 'outer_lc;
                }
            }
        }
    }
    report.push(Check::from_witness("left-action-composition", witness));

    // s▷e = e
    let mut witness = None;
    for s in 0..nm {
        if mp.act_left(s, 0) != 0 {
            witness = Some(Counterexample {
                indices: vec![s],
                left: format!("s▷e = g{}", mp.act_left(s, 0)),
                right: "e = g0".into(),
            });
            break;
        }
    }
    report.push(Check::from_witness("left-action-absorbs-unit", witness));

    // s▷(uv) = (s▷u)·((s◁u)▷v)
    let mut witness = None;
    'outer_lp: for s in 0..nm {
        for u in 0..ng {
            for v in 0..ng {
                let lhs = mp.act_left(s, mp.g_mul(u, v));
                let rhs = mp.g_mul(mp.act_left(s, u), mp.act_left(mp.act_right(s, u), v));
                if lhs != rhs {
                    witness = Some(Counterexample {
                        indices: vec![s, u, v],
                        left: format!("s▷(uv) = g{lhs}"),
                        right: format!("(s▷u)((s◁u)▷v) = g{rhs}"),
                    });
                    break 'outer_lp;
                }
            }
        }
    }
    report.push(Check::from_witness("left-action-product-rule", witness));

    report
}
