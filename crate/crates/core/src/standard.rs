//! Standard graph families with fixed vertex numbering.
//!
//! Path convention: `P_k` has `k` edges and `k + 1` vertices.
//!
//! | family | numbering |
//! |--------|-----------|
//! | `K_n`  | `0..n`, all pairs adjacent |
//! | `C_n`  | `i ~ i+1 (mod n)` |
//! | `P_k`  | `0 - 1 - ... - k` |
//! | `S_n`  | center `0`, leaves `1..=n` |
//! | `K_{m,n}` | left side `0..m`, right side `m..m+n` |
//! | sum    | summands in order, each shifted past the previous ones |

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StandardGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Sum(Vec<StandardGraph>),
}

pub fn standard_graph(spec: &StandardGraph) -> Result<Graph> {
    match *spec {
        StandardGraph::Complete(n) => Ok(complete(n)),
        StandardGraph::Cycle(n) => cycle(n),
        StandardGraph::Path(k) => Ok(path(k)),
        StandardGraph::Star(n) => Ok(star(n)),
        StandardGraph::CompleteBipartite(m, n) => Ok(complete_bipartite(m, n)),
        StandardGraph::Sum(ref parts) => {
            let mut g = Graph::empty(0);
            for p in parts {
                g = disjoint_union(&g, &standard_graph(p)?);
            }
            Ok(g)
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = Graph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// Path with `k` edges.
pub fn path(k: usize) -> Graph {
    let mut g = Graph::empty(k + 1);
    for i in 0..k {
        g.add_edge(i, i + 1);
    }
    g
}

pub fn star(n: usize) -> Graph {
    let mut g = Graph::empty(n + 1);
    for i in 1..=n {
        g.add_edge(0, i);
    }
    g
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut g = Graph::empty(m + n);
    for u in 0..m {
        for v in m..m + n {
            g.add_edge(u, v);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        let p4 = standard_graph(&StandardGraph::Path(4)).unwrap();
        assert_eq!((p4.order(), p4.size()), (5, 4));
        let s3 = standard_graph(&StandardGraph::Star(3)).unwrap();
        assert_eq!(s3.order(), 4);
        assert_eq!(s3.degree_sequence()[0], 3);
        let two_k2 = standard_graph(&StandardGraph::Sum(vec![
            StandardGraph::Complete(2),
            StandardGraph::Complete(2),
        ]))
        .unwrap();
        assert_eq!((two_k2.order(), two_k2.size()), (4, 2));
        assert_eq!(two_k2.components().len(), 2);
        assert!(standard_graph(&StandardGraph::Cycle(2)).is_err());
        assert_eq!(complete(0).order(), 0);
        assert_eq!(complete_bipartite(3, 3).size(), 9);
    }
}
