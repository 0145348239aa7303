//! Special sets for the constraint `K_n` with a triangle attached at one
//! vertex. The defining clauses are the `n`-clique clause (a) and the
//! `(n-1)`-clique clause (b); the star operator is the third item of the
//! definition (there is no second item).

use std::collections::HashMap;

use serde::Serialize;

use crate::closure::ConstraintSet;
use crate::constructions::complete_triangle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure::cliques;

/// Pairwise intersection audit of the `n`-cliques: any two are equal,
/// disjoint, or meet in `n - 1` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionAudit {
    pub cliques: usize,
    pub pairs_checked: usize,
    pub holds: bool,
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarEntry {
    pub vertex: usize,
    pub star: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Knk3Report {
    pub n: usize,
    pub input: Vec<usize>,
    pub special_sets: Vec<Vec<usize>>,
    /// `a*` for each `a` in the input.
    pub stars: Vec<StarEntry>,
    /// `a* ⊆ A` for every `a` in `A`.
    pub closed: bool,
    /// `A ∪ ⋃ a*` over `a ∈ A`.
    pub one_step: Vec<usize>,
    /// The star union iterated to a fixed point.
    pub closure: Vec<usize>,
    /// `(n + 1)|A|`.
    pub bound: usize,
    /// `|closure| ≤ bound`.
    pub bound_ok: bool,
    pub intersections: IntersectionAudit,
}

/// Special sets, sorted: `n`-cliques meeting no other `n`-clique, then
/// `(n-1)`-cliques with two or more common neighbors, merged in
/// lexicographic order.
pub fn special_sets(g: &Graph, n: usize) -> Vec<Vec<usize>> {
    let big = cliques(g, n);
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, c) in big.iter().enumerate() {
        for &v in c {
            by_vertex.entry(v).or_default().push(i);
        }
    }
    let mut out: Vec<Vec<usize>> = big
        .iter()
        .enumerate()
        .filter(|(i, c)| c.iter().all(|v| by_vertex[v].iter().all(|j| j == i)))
        .map(|(_, c)| c.clone())
        .collect();
    for c in cliques(g, n - 1) {
        let common = g
            .vertices()
            .filter(|&w| !c.contains(&w) && c.iter().all(|&x| g.has_edge(x, w)))
            .take(2)
            .count();
        if common >= 2 {
            out.push(c);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Checks the clique intersection law on every pair of `n`-cliques.
pub fn clique_intersection_audit(g: &Graph, n: usize) -> IntersectionAudit {
    let big = cliques(g, n);
    let mut pairs = 0;
    let mut bad = None;
    'outer: for i in 0..big.len() {
        let a: VertexSet = big[i].iter().copied().collect();
        for b in &big[i + 1..] {
            pairs += 1;
            let common = b.iter().filter(|v| a.contains(v)).count();
            if common != 0 && common != n - 1 {
                bad = Some((big[i].clone(), b.clone()));
                break 'outer;
            }
        }
    }
    IntersectionAudit {
        cliques: big.len(),
        pairs_checked: pairs,
        holds: bad.is_none(),
        counterexample: bad,
    }
}

fn star_of(g: &Graph, a: usize, special: &[Vec<usize>]) -> VertexSet {
    special
        .iter()
        .filter(|b| b.iter().all(|&x| x == a || g.has_edge(a, x)))
        .flatten()
        .copied()
        .collect()
}

/// Special sets, stars, the closedness criterion and the `(n+1)|A|` bound
/// on a host omitting `complete_triangle(n)`.
pub fn knk3_closure(g: &Graph, a: &VertexSet, n: usize) -> Result<Knk3Report> {
    Knk3Analysis::new(g, n)?.report(a)
}

/// [`knk3_closure`] for many input sets on one host, sharing the special
/// sets, stars and clique audit.
pub struct Knk3Analysis<'a> {
    g: &'a Graph,
    n: usize,
    special: Vec<Vec<usize>>,
    intersections: IntersectionAudit,
    stars: HashMap<usize, VertexSet>,
}

impl<'a> Knk3Analysis<'a> {
    pub fn new(g: &'a Graph, n: usize) -> Result<Knk3Analysis<'a>> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
        }
        let cs = ConstraintSet::single(complete_triangle(n)?)?;
        if cs.first_violation(g).is_some() {
            return Err(Error::ConstraintViolated(0));
        }
        Ok(Knk3Analysis {
            g,
            n,
            special: special_sets(g, n),
            intersections: clique_intersection_audit(g, n),
            stars: HashMap::new(),
        })
    }

    fn star(&mut self, v: usize) -> VertexSet {
        let (g, special) = (self.g, &self.special);
        self.stars.entry(v).or_insert_with(|| star_of(g, v, special)).clone()
    }

    pub fn report(&mut self, a: &VertexSet) -> Result<Knk3Report> {
        for &v in a {
            self.g.check_vertex(v)?;
        }
        let stars: Vec<StarEntry> = a
            .iter()
            .map(|&v| StarEntry {
                vertex: v,
                star: self.star(v).into_iter().collect(),
            })
            .collect();
        let closed = stars.iter().all(|s| s.star.iter().all(|x| a.contains(x)));
        let mut one_step = a.clone();
        for s in &stars {
            one_step.extend(s.star.iter().copied());
        }
        let mut closure = one_step.clone();
        loop {
            let mut next = closure.clone();
            for &v in &closure {
                next.extend(self.star(v));
            }
            if next.len() == closure.len() {
                break;
            }
            closure = next;
        }
        let bound = (self.n + 1) * a.len();
        Ok(Knk3Report {
            n: self.n,
            input: a.iter().copied().collect(),
            special_sets: self.special.clone(),
            stars,
            closed,
            bound_ok: closure.len() <= bound,
            bound,
            one_step: one_step.into_iter().collect(),
            closure: closure.into_iter().collect(),
            intersections: self.intersections.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, cycle};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn k5_in_k4_triangle_free_host() {
        let r = knk3_closure(&complete(5), &set(&[0]), 4).unwrap();
        assert_eq!(r.stars[0].star, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.closure.len(), 5);
        assert!(r.bound_ok);
        assert!(!r.closed);
        assert!(r.intersections.holds);
    }

    #[test]
    fn no_small_cliques() {
        let g = cycle(7).unwrap();
        let r = knk3_closure(&g, &set(&[0]), 4).unwrap();
        assert!(r.special_sets.is_empty());
        assert!(r.closed);
        assert_eq!(r.closure, vec![0]);
    }

    #[test]
    fn intersection_law() {
        // two K_4 sharing a triangle: K_5 minus an edge
        let mut g = complete(5);
        g = {
            let edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (3, 4)).collect();
            Graph::from_edges(5, &edges).unwrap()
        };
        let audit = clique_intersection_audit(&g, 4);
        assert_eq!(audit.cliques, 2);
        assert!(audit.holds);
        let bad = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        let b = clique_intersection_audit(&bad, 4);
        assert!(!b.holds);
        assert_eq!(b.counterexample, Some((vec![0, 1, 2, 3], vec![2, 3, 4, 5])));
    }
}
