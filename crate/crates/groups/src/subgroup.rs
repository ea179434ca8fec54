//! Subgroups and exhaustive subgroup enumeration.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::group::FiniteGroup;

/// A subgroup of a [`FiniteGroup`], stored as a sorted list of parent element
/// indices plus a parent-index → local-index lookup.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    local: Vec<i32>,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.elements.len(), self.parent.name())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl Subgroup {
    /// Wraps a sorted element list as a subgroup after checking closure,
    /// identity membership, and inverse closure.
    pub fn new(parent: Arc<FiniteGroup>, mut elements: Vec<usize>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return None;
        }
        let mut local = vec![-1i32; parent.order()];
        for (k, &e) in elements.iter().enumerate() {
            if e >= parent.order() {
                return None;
            }
            local[e] = k as i32;
        }
        let sg = Subgroup { parent, elements, local };
        sg.recheck_closure().then_some(sg)
    }

    /// Independent closure re-check: products and inverses of members stay
    /// inside the subgroup.
    pub fn recheck_closure(&self) -> bool {
        self.elements.iter().all(|&a| {
            self.local[self.parent.inv(a)] >= 0
                && self.elements.iter().all(|&b| self.local[self.parent.mul(a, b)] >= 0)
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted parent indices of the members.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Parent index of the local element `k`.
    #[inline]
    pub fn element(&self, k: usize) -> usize {
        self.elements[k]
    }

    /// Local index of a parent element, if it belongs to the subgroup.
    #[inline]
    pub fn local_index(&self, parent_index: usize) -> Option<usize> {
        let v = self.local[parent_index];
        (v >= 0).then_some(v as usize)
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.local[parent_index] >= 0
    }

    /// Product in local indices.
    #[inline]
    pub fn mul_local(&self, a: usize, b: usize) -> usize {
        let p = self.parent.mul(self.elements[a], self.elements[b]);
        self.local[p] as usize
    }

    /// Inverse in local indices.
    #[inline]
    pub fn inv_local(&self, a: usize) -> usize {
        self.local[self.parent.inv(self.elements[a])] as usize
    }

    /// True when some member generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|&e| self.parent.element_order(e) == self.order())
    }
}

/// Closes a subset (plus the identity) under products, returning the sorted
/// element list of the generated subgroup.
fn close_subset(group: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut member = vec![false; group.order()];
    member[0] = true;
    let mut list = vec![0usize];
    for &s in seed {
        if !member[s] {
            member[s] = true;
            list.push(s);
        }
    }
    let mut frontier = list.clone();
    while let Some(a) = frontier.pop() {
        // Right-multiplying by every current member finds all products
        // incrementally; inverses appear as powers since the group is finite.
        let mut k = 0;
        while k < list.len() {
            let b = list[k];
            for p in [group.mul(a, b), group.mul(b, a)] {
                if !member[p] {
                    member[p] = true;
                    list.push(p);
                    frontier.push(p);
                }
            }
            k += 1;
        }
    }
    list.sort_unstable();
    list
}

impl FiniteGroup {
    /// Enumerates all subgroups (or only those of a given order), sorted by
    /// size and then lexicographically by element list.
    ///
    /// The search seeds with every cyclic subgroup and repeatedly closes
    /// unions of pairs until no new subgroup appears — exhaustive for the
    /// desk-scale orders this crate targets.
    pub fn subgroups(self: &Arc<Self>, order_filter: Option<usize>) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..self.order() {
            found.insert(close_subset(self, &[x]));
        }
        loop {
            let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
            let before = found.len();
            for i in 0..snapshot.len() {
                for j in (i + 1)..snapshot.len() {
                    let mut seed = snapshot[i].clone();
                    seed.extend_from_slice(&snapshot[j]);
                    found.insert(close_subset(self, &seed));
                }
            }
            if found.len() == before {
                break;
            }
        }
        let mut all: Vec<Vec<usize>> = found
            .into_iter()
            .filter(|els| order_filter.map_or(true, |want| els.len() == want))
            .collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.into_iter()
            .map(|els| Subgroup::new(Arc::clone(self), els).expect("closure yields a subgroup"))
            .collect()
    }
}
