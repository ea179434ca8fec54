//! Group isomorphisms and exhaustive isomorphism search.

use std::sync::Arc;

use crate::group::{FiniteGroup, GroupError};

/// A verified isomorphism between two groups, stored as the image table of
/// every source element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupIsomorphism {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl std::fmt::Debug for GroupIsomorphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupIsomorphism({} -> {}, {:?})", self.source.name(), self.target.name(), self.map)
    }
}

impl GroupIsomorphism {
    /// Wraps an image table after verifying bijectivity and the homomorphism
    /// law on every pair.
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        let iso = GroupIsomorphism { source, target, map };
        iso.verify()?;
        Ok(iso)
    }

    /// Re-checks bijectivity and `map[xy] = map[x]·map[y]` exhaustively.
    pub fn verify(&self) -> Result<(), GroupError> {
        let n = self.source.order();
        if self.target.order() != n || self.map.len() != n {
            return Err(GroupError::InvalidCayley("isomorphism size mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &im in &self.map {
            if im >= n || seen[im] {
                return Err(GroupError::InvalidCayley("isomorphism map is not a bijection".into()));
            }
            seen[im] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if self.map[self.source.mul(x, y)] != self.target.mul(self.map[x], self.map[y]) {
                    return Err(GroupError::InvalidCayley(format!(
                        "homomorphism law fails at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    /// Image of a source element.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// The full image table.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// The inverse isomorphism.
    pub fn inverse(&self) -> GroupIsomorphism {
        let mut inv = vec![0usize; self.map.len()];
        for (x, &im) in self.map.iter().enumerate() {
            inv[im] = x;
        }
        GroupIsomorphism {
            source: Arc::clone(&self.target),
            target: Arc::clone(&self.source),
            map: inv,
        }
    }

    /// Composition `other ∘ self` (apply `self` first). Requires `self`'s
    /// target and `other`'s source to be the same group instance.
    pub fn then(&self, other: &GroupIsomorphism) -> GroupIsomorphism {
        assert!(
            Arc::ptr_eq(&self.target, &other.source),
            "composition requires matching middle group"
        );
        GroupIsomorphism {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        }
    }
}

/// Minimal generating sequence found greedily by ascending element index.
fn greedy_generators(group: &FiniteGroup) -> Vec<usize> {
    let n = group.order();
    let mut generated = vec![false; n];
    generated[0] = true;
    let mut count = 1;
    let mut gens = Vec::new();
    for x in 1..n {
        if generated[x] {
            continue;
        }
        gens.push(x);
        // Close the current set under right-multiplication by all members.
        let mut list: Vec<usize> = (0..n).filter(|&e| generated[e]).collect();
        let mut added = vec![x];
        generated[x] = true;
        count += 1;
        list.push(x);
        while let Some(a) = added.pop() {
            let mut k = 0;
            while k < list.len() {
                let b = list[k];
                for p in [group.mul(a, b), group.mul(b, a)] {
                    if !generated[p] {
                        generated[p] = true;
                        count += 1;
                        list.push(p);
                        added.push(p);
                    }
                }
                k += 1;
            }
        }
        if count == n {
            break;
        }
    }
    gens
}

/// How each source element is reached from the generators: `None` for the
/// identity, otherwise `(parent, generator slot)` with
/// `element = parent · gens[slot]`.
fn derivations(group: &FiniteGroup, gens: &[usize]) -> Vec<Option<(usize, usize)>> {
    let n = group.order();
    let mut derivation: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let parent = queue[head];
        head += 1;
        for (slot, &g) in gens.iter().enumerate() {
            let child = group.mul(parent, g);
            if !reached[child] {
                reached[child] = true;
                derivation[child] = Some((parent, slot));
                queue.push(child);
            }
        }
    }
    debug_assert!(reached.iter().all(|&r| r), "generators do not generate the group");
    derivation
}

/// Finds **all** isomorphisms from `src` onto `tgt`, optionally restricted by
/// a pointwise admissibility predicate `constraint(element, image)` that must
/// hold for every element of `src`.
///
/// The search backtracks over images of a greedy generating set, pruning by
/// element order and by the constraint as soon as each image is determined,
/// then validates the induced full map. Results are ordered lexicographically
/// by the generator-image tuple, so the output is deterministic.
pub fn find_isomorphisms(
    src: &Arc<FiniteGroup>,
    tgt: &Arc<FiniteGroup>,
    constraint: Option<&dyn Fn(usize, usize) -> bool>,
) -> Vec<GroupIsomorphism> {
    if src.order() != tgt.order() || src.order_profile() != tgt.order_profile() {
        return Vec::new();
    }
    let n = src.order();
    let gens = greedy_generators(src);
    if gens.is_empty() {
        // Trivial group: the unique map is the identity.
        let map = vec![0usize];
        let ok = constraint.map_or(true, |c| c(0, 0));
        return if ok {
            vec![GroupIsomorphism { source: Arc::clone(src), target: Arc::clone(tgt), map }]
        } else {
            Vec::new()
        };
    }
    let derivation = derivations(src, &gens);
    // BFS order in which images can be propagated.
    let mut bfs_order: Vec<usize> = Vec::with_capacity(n);
    {
        let mut reached = vec![false; n];
        reached[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let parent = queue[head];
            head += 1;
            for &g in &gens {
                let child = src.mul(parent, g);
                if !reached[child] {
                    reached[child] = true;
                    queue.push(child);
                }
            }
        }
        bfs_order.extend(queue);
    }

    let src_orders: Vec<usize> = (0..n).map(|x| src.element_order(x)).collect();
    let tgt_orders: Vec<usize> = (0..n).map(|x| tgt.element_order(x)).collect();

    let mut results = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search(
        src,
        tgt,
        &gens,
        &derivation,
        &bfs_order,
        &src_orders,
        &tgt_orders,
        constraint,
        0,
        &mut images,
        &mut results,
    );
    results
}

#[allow(clippy::too_many_arguments)]
fn search(
    src: &Arc<FiniteGroup>,
    tgt: &Arc<FiniteGroup>,
    gens: &[usize],
    derivation: &[Option<(usize, usize)>],
    bfs_order: &[usize],
    src_orders: &[usize],
    tgt_orders: &[usize],
    constraint: Option<&dyn Fn(usize, usize) -> bool>,
    slot: usize,
    images: &mut Vec<usize>,
    results: &mut Vec<GroupIsomorphism>,
) {
    if slot == gens.len() {
        if let Some(map) = extend(src, tgt, derivation, bfs_order, src_orders, tgt_orders, constraint, images) {
            results.push(GroupIsomorphism {
                source: Arc::clone(src),
                target: Arc::clone(tgt),
                map,
            });
        }
        return;
    }
    let gen = gens[slot];
    for candidate in 0..tgt.order() {
        if tgt_orders[candidate] != src_orders[gen] {
            continue;
        }
        if let Some(c) = constraint {
            if !c(gen, candidate) {
                continue;
            }
        }
        images[slot] = candidate;
        search(
            src, tgt, gens, derivation, bfs_order, src_orders, tgt_orders, constraint, slot + 1,
            images, results,
        );
    }
}

/// Propagates generator images to the whole group and validates the result;
/// returns the full image table when it is a constraint-satisfying
/// isomorphism.
#[allow(clippy::too_many_arguments)]
fn extend(
    src: &Arc<FiniteGroup>,
    tgt: &Arc<FiniteGroup>,
    derivation: &[Option<(usize, usize)>],
    bfs_order: &[usize],
    src_orders: &[usize],
    tgt_orders: &[usize],
    constraint: Option<&dyn Fn(usize, usize) -> bool>,
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = src.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    if let Some(c) = constraint {
        if !c(0, 0) {
            return None;
        }
    }
    for &x in bfs_order.iter().skip(1) {
        let (parent, slot) = derivation[x].expect("non-identity elements have derivations");
        let image = tgt.mul(map[parent], images[slot]);
        if used[image] || src_orders[x] != tgt_orders[image] {
            return None;
        }
        if let Some(c) = constraint {
            if !c(x, image) {
                return None;
            }
        }
        map[x] = image;
        used[image] = true;
    }
    // Full homomorphism validation.
    for x in 0..n {
        for y in 0..n {
            if map[src.mul(x, y)] != tgt.mul(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}
