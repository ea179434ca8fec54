//! The builtin group catalog: `cyclic:n`, `dihedral:n`, `sym:n`, and
//! `product:spec,spec`.

use std::sync::Arc;

use thiserror::Error;

use crate::group::FiniteGroup;

/// A builtin spec string failed to parse or describes an unsupported group.
#[derive(Debug, Error)]
pub enum SpecError {
    #[error("unrecognized group spec `{0}`; expected cyclic:n | dihedral:n | sym:n | product:spec,spec")]
    Unrecognized(String),
    #[error("group spec `{0}`: n must be at least 1")]
    NonPositive(String),
    #[error("group spec `{spec}` describes a group of order {order}, above the builtin cap of {cap}")]
    TooLarge { spec: String, order: usize, cap: usize },
    #[error("internal error while building `{0}`: {1}")]
    Construction(String, String),
}

const BUILTIN_ORDER_CAP: usize = 2048;

/// Builds a group from a spec string.
///
/// Grammar: `cyclic:n` (order n), `dihedral:n` (order 2n, with the rotation
/// `a` and reflection `b` obeying `bab = a^{-1}`), `sym:n` (all permutations
/// of n points, ordered lexicographically by image table), and
/// `product:spec,spec` (direct product with lexicographic element order,
/// left factor major). The group's name is the spec itself.
pub fn builtin_group(spec: &str) -> Result<Arc<FiniteGroup>, SpecError> {
    let mut cursor = Cursor { text: spec, pos: 0 };
    let table = cursor.parse_spec()?;
    if cursor.pos != spec.len() {
        return Err(SpecError::Unrecognized(spec.to_string()));
    }
    let n = table.order;
    if n > BUILTIN_ORDER_CAP {
        return Err(SpecError::TooLarge { spec: spec.to_string(), order: n, cap: BUILTIN_ORDER_CAP });
    }
    FiniteGroup::from_flat(spec.to_string(), n, table.cayley)
        .map_err(|e| SpecError::Construction(spec.to_string(), e.to_string()))
}

/// Raw table produced by the recursive parser, before validation.
struct RawTable {
    order: usize,
    cayley: Vec<u32>,
}

impl RawTable {
    fn at(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order + j] as usize
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn parse_number(&mut self) -> Result<usize, SpecError> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(SpecError::Unrecognized(self.text.to_string()));
        }
        self.pos += digits.len();
        let n: usize = digits.parse().map_err(|_| SpecError::Unrecognized(self.text.to_string()))?;
        if n < 1 {
            return Err(SpecError::NonPositive(self.text.to_string()));
        }
        Ok(n)
    }

    fn parse_spec(&mut self) -> Result<RawTable, SpecError> {
        if self.eat("cyclic:") {
            let n = self.parse_number()?;
            Ok(cyclic_table(n))
        } else if self.eat("dihedral:") {
            let n = self.parse_number()?;
            Ok(dihedral_table(n))
        } else if self.eat("sym:") {
            let n = self.parse_number()?;
            if n > 7 {
                // 8! = 40320 would blow the order cap anyway; fail early.
                return Err(SpecError::TooLarge {
                    spec: self.text.to_string(),
                    order: (1..=n).product(),
                    cap: BUILTIN_ORDER_CAP,
                });
            }
            Ok(symmetric_table(n))
        } else if self.eat("product:") {
            let left = self.parse_spec()?;
            if !self.eat(",") {
                return Err(SpecError::Unrecognized(self.text.to_string()));
            }
            let right = self.parse_spec()?;
            Ok(product_table(&left, &right))
        } else {
            Err(SpecError::Unrecognized(self.text.to_string()))
        }
    }
}

fn cyclic_table(n: usize) -> RawTable {
    let mut cayley = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            cayley[i * n + j] = ((i + j) % n) as u32;
        }
    }
    RawTable { order: n, cayley }
}

/// Dihedral group of order 2n: element `i + n*j` is `a^i b^j` with `a` the
/// rotation of order n and `b` the reflection, so `a^i b^j · a^k b^l =
/// a^{i + (-1)^j k} b^{j+l}`.
fn dihedral_table(n: usize) -> RawTable {
    let order = 2 * n;
    let mut cayley = vec![0u32; order * order];
    for i in 0..n {
        for j in 0..2 {
            for k in 0..n {
                for l in 0..2 {
                    let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
                    let refl = (j + l) % 2;
                    cayley[(i + n * j) * order + (k + n * l)] = (rot + n * refl) as u32;
                }
            }
        }
    }
    RawTable { order, cayley }
}

/// Symmetric group on n points; elements are all image tables in
/// lexicographic order (the identity is lexicographically first).
fn symmetric_table(n: usize) -> RawTable {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        perms.push(current.clone());
        // Next permutation in lexicographic order.
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    let order = perms.len();
    let index_of: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().cloned().zip(0..).collect();
    let mut cayley = vec![0u32; order * order];
    for i in 0..order {
        for j in 0..order {
            let product = crate::generate::compose(&perms[i], &perms[j]);
            cayley[i * order + j] = index_of[&product] as u32;
        }
    }
    RawTable { order, cayley }
}

/// Direct product with lexicographic indexing: `(a, b) -> a * |B| + b`.
fn product_table(a: &RawTable, b: &RawTable) -> RawTable {
    let order = a.order * b.order;
    let mut cayley = vec![0u32; order * order];
    for a1 in 0..a.order {
        for b1 in 0..b.order {
            let i = a1 * b.order + b1;
            for a2 in 0..a.order {
                for b2 in 0..b.order {
                    let j = a2 * b.order + b2;
                    cayley[i * order + j] = (a.at(a1, a2) * b.order + b.at(b1, b2)) as u32;
                }
            }
        }
    }
    RawTable { order, cayley }
}
