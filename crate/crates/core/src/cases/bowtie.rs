use serde::Serialize;

use crate::closure::ConstraintSet;
use crate::constructions::bowtie;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure::{triangles, triangles_on_edge};

/// One of the three structural claims, with the offending vertices when it
/// fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub holds: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl ClaimCheck {
    fn from(counterexample: Option<Vec<usize>>) -> ClaimCheck {
        ClaimCheck {
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BowtieReport {
    pub input: Vec<usize>,
    pub special_edges: Vec<(usize, usize)>,
    pub a_star: Vec<usize>,
    /// `(A*)*`.
    pub a_star_star: Vec<usize>,
    /// `A** = A*`.
    pub star_stable: bool,
    /// 1: every triangle has a special edge. 2: a triangle point on no
    /// special edge of that triangle lies on no other triangle. 3: a point on
    /// two special edges lies on a `K_4` holding every triangle through it.
    pub claims: [ClaimCheck; 3],
    /// `|A*| ≤ 4|A|`.
    pub bound_ok: bool,
}

/// Edges lying on at least two triangles, in lexicographic order.
pub fn special_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().filter(|&(u, v)| triangles_on_edge(g, u, v) >= 2).collect()
}

/// `A` together with the endpoints of special edges on triangles meeting `A`.
pub fn a_star(g: &Graph, a: &VertexSet) -> VertexSet {
    let mut out = a.clone();
    for t in triangles(g) {
        if !t.iter().any(|v| a.contains(v)) {
            continue;
        }
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if triangles_on_edge(g, t[i], t[j]) >= 2 {
                out.insert(t[i]);
                out.insert(t[j]);
            }
        }
    }
    out
}

/// Special edges, `A*`, `A**` and the three claims on a bow-tie-free host.
pub fn bowtie_closure(g: &Graph, a: &VertexSet) -> Result<BowtieReport> {
    for &v in a {
        g.check_vertex(v)?;
    }
    let cs = ConstraintSet::single(bowtie())?;
    if cs.first_violation(g).is_some() {
        return Err(Error::ConstraintViolated(0));
    }
    let once = a_star(g, a);
    let twice = a_star(g, &once);
    Ok(BowtieReport {
        input: a.iter().copied().collect(),
        special_edges: special_edges(g),
        star_stable: once == twice,
        bound_ok: once.len() <= 4 * a.len(),
        a_star: once.into_iter().collect(),
        a_star_star: twice.into_iter().collect(),
        claims: claims_within(g, None),
    })
}

/// The three claims, restricted to triangles inside `region` for (1) and to
/// points of `region` for (2) and (3). Special edges are always those of
/// the whole host.
pub fn claims_within(g: &Graph, region: Option<&VertexSet>) -> [ClaimCheck; 3] {
    let inside = |v: usize| region.is_none_or(|r| r.contains(&v));
    [
        ClaimCheck::from(claim_one(g, &inside)),
        ClaimCheck::from(claim_two(g, &inside)),
        ClaimCheck::from(claim_three(g, &inside)),
    ]
}

/// Vertices of `region` all of whose triangles lie inside `region`. On a
/// finite approximant this is where the local triangle structure is final.
pub fn settled(g: &Graph, region: &VertexSet) -> VertexSet {
    let mut out = region.clone();
    for t in triangles(g) {
        if !t.iter().all(|v| region.contains(v)) {
            for v in t {
                out.remove(&v);
            }
        }
    }
    out
}

fn special(g: &Graph, u: usize, v: usize) -> bool {
    triangles_on_edge(g, u, v) >= 2
}

fn claim_one(g: &Graph, inside: &dyn Fn(usize) -> bool) -> Option<Vec<usize>> {
    triangles(g)
        .into_iter()
        .filter(|t| t.iter().all(|&v| inside(v)))
        .find(|t| !special(g, t[0], t[1]) && !special(g, t[0], t[2]) && !special(g, t[1], t[2]))
        .map(|t| t.to_vec())
}

/// Counterexample layout: the triangle, then the point.
fn claim_two(g: &Graph, inside: &dyn Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut on = vec![0usize; g.order()];
    let all = triangles(g);
    for t in &all {
        for &v in t {
            on[v] += 1;
        }
    }
    for t in &all {
        for (i, &p) in t.iter().enumerate() {
            if !inside(p) {
                continue;
            }
            let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| t[j]).collect();
            if others.iter().all(|&q| !special(g, p, q)) && on[p] != 1 {
                return Some(vec![t[0], t[1], t[2], p]);
            }
        }
    }
    None
}

fn claim_three(g: &Graph, inside: &dyn Fn(usize) -> bool) -> Option<Vec<usize>> {
    for p in g.vertices().filter(|&p| inside(p)) {
        let nbrs = g.neighbors(p);
        if nbrs.iter().filter(|&&q| special(g, p, q)).count() < 2 {
            continue;
        }
        let through: Vec<(usize, usize)> = nbrs
            .iter()
            .flat_map(|&x| nbrs.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
            .filter(|&(x, y)| g.has_edge(x, y))
            .collect();
        let covered = through.iter().any(|&(x, y)| {
            nbrs.iter().any(|&z| {
                z != x && z != y && g.has_edge(x, z) && g.has_edge(y, z) && {
                    let k = [p, x, y, z];
                    through.iter().all(|&(s, t)| k.contains(&s) && k.contains(&t))
                }
            })
        });
        if !covered {
            return Some(vec![p]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_amalgam;
    use crate::standard::{complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn special_edge_examples() {
        assert_eq!(special_edges(&complete(4)).len(), 6);
        assert!(special_edges(&bowtie()).is_empty());
        assert!(special_edges(&cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn k4_closure() {
        let g = vertex_amalgam(&complete(4), 3, &path(2), 0).unwrap();
        let r = bowtie_closure(&g, &set(&[0])).unwrap();
        assert_eq!(r.a_star, vec![0, 1, 2, 3]);
        assert!(r.bound_ok);
        assert!(r.star_stable);
        assert!(r.claims.iter().all(|c| c.holds));
    }

    #[test]
    fn triangle_free_and_lone_triangle() {
        let g = cycle(6).unwrap();
        assert_eq!(bowtie_closure(&g, &set(&[0, 3])).unwrap().a_star, vec![0, 3]);
        let t = bowtie_closure(&complete(3), &set(&[0])).unwrap();
        assert!(!t.claims[0].holds);
        assert_eq!(t.claims[0].counterexample, Some(vec![0, 1, 2]));
        assert!(t.claims[1].holds && t.claims[2].holds);
        assert!(bowtie_closure(&bowtie(), &set(&[0])).is_err());
    }

    #[test]
    fn settled_vertices() {
        let g = vertex_amalgam(&complete(3), 2, &path(3), 0).unwrap();
        assert_eq!(settled(&g, &set(&[0, 1, 2, 3])), set(&[0, 1, 2, 3]));
        assert_eq!(settled(&g, &set(&[0, 2, 3, 4])), set(&[3, 4]));
    }
}
