//! Canonical codes for small (optionally vertex-colored) graphs.
//!
//! The code is the lexicographically smallest encoding (colors in vertex
//! order, then the upper-triangle adjacency bits) over all vertex orderings
//! compatible with an isomorphism-invariant refinement of the degree
//! partition. Orderings are generated by individualizing one vertex of the
//! first non-singleton cell and refining again; branches on twin vertices
//! (same neighborhood apart from each other) are skipped since swapping
//! twins is an automorphism.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self.to_hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for CanonicalCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s.len() % 2 != 0 {
            return Err(serde::de::Error::custom("odd-length hex"));
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16))
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map(CanonicalCode)
            .map_err(serde::de::Error::custom)
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_code_colored(g, &vec![0; g.order()])
}

pub fn canonical_code_colored(g: &Graph, colors: &[u8]) -> Result<CanonicalCode> {
    Ok(canonical_form(g, colors)?.0)
}

/// Returns the code with an ordering realizing it: `order[i]` is the vertex
/// placed at canonical position `i`.
pub fn canonical_form(g: &Graph, colors: &[u8]) -> Result<(CanonicalCode, Vec<usize>)> {
    let caps = Caps::current();
    let limit = caps.canon.min(64);
    if g.order() > limit {
        return Err(Error::CapExceeded {
            name: "canon",
            limit,
            actual: g.order(),
        });
    }
    assert_eq!(colors.len(), g.order());
    let n = g.order();
    let rows: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    let ctx = Ctx {
        n,
        rows: &rows,
        colors,
    };
    let init: Vec<usize> = {
        let keys: Vec<(u8, usize)> = (0..n).map(|v| (colors[v], g.degree(v))).collect();
        rank(&keys)
    };
    let part = ctx.refine(init);
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    ctx.search(part, &mut best);
    let (code, order) = best.unwrap_or_else(|| (ctx.encode(&[]), Vec::new()));
    Ok((CanonicalCode(code), order))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

struct Ctx<'a> {
    n: usize,
    rows: &'a [u64],
    colors: &'a [u8],
}

impl Ctx<'_> {
    /// Color refinement to a stable partition; cell ids are ranks of
    /// invariant keys, so the result is isomorphism-equivariant.
    fn refine(&self, mut cell: Vec<usize>) -> Vec<usize> {
        let mut cells = count_cells(&cell);
        loop {
            let keys: Vec<(usize, Vec<usize>)> = (0..self.n)
                .map(|v| {
                    let mut counts = vec![0usize; cells];
                    let mut r = self.rows[v];
                    while r != 0 {
                        let w = r.trailing_zeros() as usize;
                        counts[cell[w]] += 1;
                        r &= r - 1;
                    }
                    (cell[v], counts)
                })
                .collect();
            let next = rank(&keys);
            let next_cells = count_cells(&next);
            if next_cells == cells {
                return next;
            }
            cell = next;
            cells = next_cells;
        }
    }

    fn search(&self, part: Vec<usize>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
        let cells = count_cells(&part);
        if cells == self.n {
            let mut order = vec![0; self.n];
            for (v, &c) in part.iter().enumerate() {
                order[c] = v;
            }
            let code = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
            return;
        }
        // first non-singleton cell
        let mut size = vec![0usize; cells];
        for &c in &part {
            size[c] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).unwrap();
        let members: Vec<usize> = (0..self.n).filter(|&v| part[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &members {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let keys: Vec<(usize, usize)> = (0..self.n)
                .map(|w| (part[w], usize::from(w != v)))
                .collect();
            let split = rank(&keys);
            self.search(self.refine(split), best);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mask = !((1u64 << u) | (1u64 << v));
        self.rows[u] & mask == self.rows[v] & mask
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + self.n + self.n * self.n / 16);
        out.extend_from_slice(&(self.n as u16).to_be_bytes());
        out.extend(order.iter().map(|&v| self.colors[v]));
        let mut byte = 0u8;
        let mut bits = 0;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                byte = (byte << 1) | u8::from(self.rows[order[i]] >> order[j] & 1 == 1);
                bits += 1;
                if bits == 8 {
                    out.push(byte);
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push(byte << (8 - bits));
        }
        out
    }
}

fn count_cells(part: &[usize]) -> usize {
    part.iter().max().map_or(0, |&m| m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, complete_bipartite, cycle, path};

    #[test]
    fn invariance_and_separation() {
        let c5 = cycle(5).unwrap();
        let relabeled = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&relabeled).unwrap());
        assert_ne!(canonical_code(&complete(3)).unwrap(), canonical_code(&path(2)).unwrap());
        assert_ne!(
            canonical_code(&Graph::empty(2)).unwrap(),
            canonical_code(&complete(2)).unwrap()
        );
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [complete(12), Graph::empty(12), complete_bipartite(6, 6), cycle(12).unwrap()] {
            let (code, order) = canonical_form(&g, &[0; 12]).unwrap();
            let reordered = g.permuted(&{
                let mut inv = vec![0; 12];
                for (i, &v) in order.iter().enumerate() {
                    inv[v] = i;
                }
                inv
            });
            assert_eq!(canonical_code(&reordered).unwrap(), code);
        }
    }

    #[test]
    fn colors_matter() {
        let p = path(2);
        let end = canonical_code_colored(&p, &[1, 0, 0]).unwrap();
        let end2 = canonical_code_colored(&p, &[0, 0, 1]).unwrap();
        let mid = canonical_code_colored(&p, &[0, 1, 0]).unwrap();
        assert_eq!(end, end2);
        assert_ne!(end, mid);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            canonical_code(&Graph::empty(13)),
            Err(Error::CapExceeded { name: "canon", .. })
        ));
    }

    #[test]
    fn hex_round_trip() {
        let c = canonical_code(&cycle(5).unwrap()).unwrap();
        let js = serde_json::to_string(&c).unwrap();
        let back: CanonicalCode = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);
    }
}
