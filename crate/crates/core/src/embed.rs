//! Subgraph embeddings by backtracking search.
//!
//! A weak embedding carries pattern edges onto host edges; an induced
//! embedding additionally carries non-edges onto non-edges. Pattern vertices
//! are matched in a connectivity-first order and candidates are drawn from
//! the neighborhood of an already-matched neighbor, so searches seeded by a
//! partial assignment stay local in large hosts.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingMode {
    Weak,
    Induced,
}

/// An injective map from pattern vertices to host vertices:
/// `assignment[p]` is the image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EmbeddingMap {
    pub assignment: Vec<usize>,
    pub mode: EmbeddingMode,
}

impl EmbeddingMap {
    /// Re-checks the map against the graphs.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        is_embedding(pattern, host, self.mode, &self.assignment)
    }
}

pub fn is_embedding(pattern: &Graph, host: &Graph, mode: EmbeddingMode, assignment: &[usize]) -> bool {
    if assignment.len() != pattern.order() || assignment.iter().any(|&h| h >= host.order()) {
        return false;
    }
    for i in 0..assignment.len() {
        for j in i + 1..assignment.len() {
            let (a, b) = (assignment[i], assignment[j]);
            if a == b {
                return false;
            }
            let pe = pattern.has_edge(i, j);
            let he = host.has_edge(a, b);
            if (pe && !he) || (mode == EmbeddingMode::Induced && !pe && he) {
                return false;
            }
        }
    }
    true
}

/// All extensions of `partial` (pairs `(pattern vertex, host vertex)`) to
/// full embeddings, sorted lexicographically by assignment.
pub fn embeddings(
    pattern: &Graph,
    host: &Graph,
    mode: EmbeddingMode,
    partial: &[(usize, usize)],
) -> Result<Vec<EmbeddingMap>> {
    let mut out = Vec::new();
    for_each_embedding(pattern, host, mode, partial, |a| {
        out.push(EmbeddingMap {
            assignment: a.to_vec(),
            mode,
        });
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Any one embedding extending `partial`, if one exists.
pub fn find_embedding(
    pattern: &Graph,
    host: &Graph,
    mode: EmbeddingMode,
    partial: &[(usize, usize)],
) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_embedding(pattern, host, mode, partial, |a| {
        found = Some(a.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn embeds(pattern: &Graph, host: &Graph, mode: EmbeddingMode) -> bool {
    find_embedding(pattern, host, mode, &[])
        .expect("empty partial assignment is always consistent")
        .is_some()
}

pub fn count_embeddings(pattern: &Graph, host: &Graph, mode: EmbeddingMode) -> usize {
    let mut n = 0;
    for_each_embedding(pattern, host, mode, &[], |_| {
        n += 1;
        ControlFlow::Continue(())
    })
    .expect("empty partial assignment is always consistent");
    n
}

/// True iff some embedding of `pattern` has an image meeting `touch`.
pub fn embeds_touching(pattern: &Graph, host: &Graph, mode: EmbeddingMode, touch: &[usize]) -> bool {
    for &x in touch {
        for p in pattern.vertices() {
            if pattern.degree(p) > host.degree(x) {
                continue;
            }
            if let Ok(Some(_)) = find_embedding(pattern, host, mode, &[(p, x)]) {
                return true;
            }
        }
    }
    false
}

/// Visits every embedding extending `partial`. The visitor returns
/// `Break` to stop early. Visiting order is not lexicographic.
pub fn for_each_embedding<F>(
    pattern: &Graph,
    host: &Graph,
    mode: EmbeddingMode,
    partial: &[(usize, usize)],
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    validate_partial(pattern, host, mode, partial)?;
    if pattern.order() > host.order() {
        return Ok(());
    }
    let plan = Plan::new(pattern, partial);
    let mut assign = vec![usize::MAX; pattern.order()];
    let mut used: Vec<usize> = Vec::with_capacity(pattern.order());
    for &(p, h) in partial {
        assign[p] = h;
        used.push(h);
    }
    let mut search = Search {
        pattern,
        host,
        mode,
        plan: &plan,
        assign,
        used,
    };
    let _ = search.extend(partial.len(), &mut visit);
    Ok(())
}

fn validate_partial(pattern: &Graph, host: &Graph, mode: EmbeddingMode, partial: &[(usize, usize)]) -> Result<()> {
    for (i, &(p, h)) in partial.iter().enumerate() {
        pattern.check_vertex(p)?;
        host.check_vertex(h)?;
        for &(q, k) in &partial[..i] {
            if p == q || h == k {
                return Err(Error::InvalidEmbedding("partial assignment is not injective".into()));
            }
            let pe = pattern.has_edge(p, q);
            let he = host.has_edge(h, k);
            if (pe && !he) || (mode == EmbeddingMode::Induced && !pe && he) {
                return Err(Error::InvalidEmbedding(format!(
                    "partial assignment {p}->{h}, {q}->{k} is inconsistent"
                )));
            }
        }
    }
    Ok(())
}

struct Plan {
    order: Vec<usize>,
    /// For each position, earlier-positioned pattern neighbors.
    back_nbrs: Vec<Vec<usize>>,
    /// For each position, earlier-positioned pattern non-neighbors.
    back_non: Vec<Vec<usize>>,
}

impl Plan {
    fn new(pattern: &Graph, partial: &[(usize, usize)]) -> Plan {
        let n = pattern.order();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &(p, _) in partial {
            placed[p] = true;
            order.push(p);
        }
        let mut links = vec![0usize; n];
        for &p in &order {
            for &w in pattern.neighbors(p) {
                links[w] += 1;
            }
        }
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by(|&a, &b| {
                    (links[a], pattern.degree(a), std::cmp::Reverse(a))
                        .cmp(&(links[b], pattern.degree(b), std::cmp::Reverse(b)))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
            for &w in pattern.neighbors(next) {
                links[w] += 1;
            }
        }
        let mut pos = vec![0; n];
        for (i, &p) in order.iter().enumerate() {
            pos[p] = i;
        }
        let mut back_nbrs = vec![Vec::new(); n];
        let mut back_non = vec![Vec::new(); n];
        for (i, &p) in order.iter().enumerate() {
            for &q in &order[..i] {
                if pattern.has_edge(p, q) {
                    back_nbrs[i].push(q);
                } else {
                    back_non[i].push(q);
                }
            }
            back_nbrs[i].sort_by_key(|&q| pos[q]);
        }
        Plan {
            order,
            back_nbrs,
            back_non,
        }
    }
}

struct Search<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    mode: EmbeddingMode,
    plan: &'a Plan,
    assign: Vec<usize>,
    used: Vec<usize>,
}

impl Search<'_> {
    fn extend<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.plan.order.len() {
            return visit(&self.assign);
        }
        let p = self.plan.order[depth];
        let need = self.pattern.degree(p);
        let back = &self.plan.back_nbrs[depth];
        let pivot = back
            .iter()
            .map(|&q| self.assign[q])
            .min_by_key(|&h| self.host.degree(h));
        let host = self.host;
        let candidates: &mut dyn Iterator<Item = usize> = match pivot {
            Some(h) => &mut host.neighbors(h).iter().copied(),
            None => &mut host.vertices(),
        };
        for c in candidates {
            if host.degree(c) < need || self.used.contains(&c) {
                continue;
            }
            if !back.iter().all(|&q| host.has_edge(c, self.assign[q])) {
                continue;
            }
            if self.mode == EmbeddingMode::Induced
                && self.plan.back_non[depth].iter().any(|&q| host.has_edge(c, self.assign[q]))
            {
                continue;
            }
            self.assign[p] = c;
            self.used.push(c);
            let flow = self.extend(depth + 1, visit);
            self.used.pop();
            self.assign[p] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, cycle, path};

    /// Independent oracle: scan every injection.
    fn brute(pattern: &Graph, host: &Graph, mode: EmbeddingMode) -> Vec<Vec<usize>> {
        fn rec(p: &Graph, h: &Graph, mode: EmbeddingMode, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == p.order() {
                if is_embedding(p, h, mode, cur) {
                    out.push(cur.clone());
                }
                return;
            }
            for v in h.vertices() {
                if !cur.contains(&v) {
                    cur.push(v);
                    rec(p, h, mode, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(pattern, host, mode, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn counts() {
        let e = embeddings(&complete(2), &complete(3), EmbeddingMode::Weak, &[]).unwrap();
        assert_eq!(e.len(), 6);
        assert!(embeddings(&complete(3), &cycle(5).unwrap(), EmbeddingMode::Weak, &[])
            .unwrap()
            .is_empty());
        let c4 = cycle(4).unwrap();
        let p2 = path(2);
        let ind = embeddings(&p2, &c4, EmbeddingMode::Induced, &[]).unwrap();
        assert_eq!(ind.len(), brute(&p2, &c4, EmbeddingMode::Induced).len());
        assert_eq!(ind.len(), 8);
    }

    #[test]
    fn sorted_and_partial() {
        let c4 = cycle(4).unwrap();
        let all = embeddings(&path(1), &c4, EmbeddingMode::Weak, &[]).unwrap();
        let expect: Vec<Vec<usize>> = brute(&path(1), &c4, EmbeddingMode::Weak);
        assert_eq!(all.iter().map(|m| m.assignment.clone()).collect::<Vec<_>>(), expect);
        let part = embeddings(&path(1), &c4, EmbeddingMode::Weak, &[(0, 2)]).unwrap();
        assert_eq!(part.len(), 2);
        assert!(part.iter().all(|m| m.assignment[0] == 2 && m.is_valid(&path(1), &c4)));
        assert!(embeddings(&path(1), &c4, EmbeddingMode::Weak, &[(0, 0), (1, 2)]).is_err());
        assert!(embeddings(&path(1), &c4, EmbeddingMode::Weak, &[(0, 0), (1, 0)]).is_err());
    }

    #[test]
    fn touching() {
        let mut g = complete(3);
        let x = g.add_vertex();
        g.add_edge(0, x);
        assert!(!embeds_touching(&complete(3), &g, EmbeddingMode::Weak, &[x]));
        assert!(embeds_touching(&complete(3), &g, EmbeddingMode::Weak, &[1]));
    }
}
