//! Exhaustive generation of small graphs up to isomorphism, and seeded
//! random graphs.
//!
//! Graphs of order `n` are produced from representatives of order `n - 1`
//! by adding a vertex joined to every possible subset of the old vertices;
//! every graph arises this way (delete any vertex), and duplicates are
//! removed by canonical code.

use std::collections::HashSet;

use rand::Rng;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::Result;
use crate::graph::Graph;

/// One representative per isomorphism class on exactly `n` vertices, sorted
/// by canonical code.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for_each_graph_of_order(n, |g| out.push(g.clone()))?;
    Ok(out)
}

/// All graphs with at most `max` vertices (including the empty graph),
/// grouped by order.
pub fn graphs_up_to(max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut level = vec![Graph::empty(0)];
    out.extend(level.iter().cloned());
    for _ in 1..=max {
        level = next_level(&level, |_| {})?;
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

pub fn connected_graphs_up_to(max: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(max)?
        .into_iter()
        .filter(|g| g.order() > 0 && g.is_connected())
        .collect())
}

/// Streams the order-`n` representatives without storing them. Lower
/// orders are materialized, so memory stays bounded by level `n - 1`.
pub fn for_each_graph_of_order<F: FnMut(&Graph)>(n: usize, mut visit: F) -> Result<()> {
    if n == 0 {
        visit(&Graph::empty(0));
        return Ok(());
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 1..n {
        level = next_level(&level, |_| {})?;
    }
    let mut emitted = Vec::new();
    next_level_streaming(&level, |g, code| emitted.push((code, g)))?;
    emitted.sort_by(|a, b| a.0.cmp(&b.0));
    for (_, g) in &emitted {
        visit(g);
    }
    Ok(())
}

/// Streams order-`n` representatives in generation order (not sorted),
/// holding only their codes.
pub fn for_each_graph_of_order_unsorted<F: FnMut(&Graph)>(n: usize, mut visit: F) -> Result<()> {
    if n == 0 {
        visit(&Graph::empty(0));
        return Ok(());
    }
    let mut level = vec![Graph::empty(0)];
    for _ in 1..n {
        level = next_level(&level, |_| {})?;
    }
    next_level_streaming(&level, |g, _| visit(&g))
}

fn next_level<F: FnMut(&Graph)>(level: &[Graph], mut visit: F) -> Result<Vec<Graph>> {
    let mut out: Vec<(CanonicalCode, Graph)> = Vec::new();
    next_level_streaming(level, |g, code| {
        visit(&g);
        out.push((code, g));
    })?;
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn next_level_streaming<F: FnMut(Graph, CanonicalCode)>(level: &[Graph], mut emit: F) -> Result<()> {
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    for base in level {
        let m = base.order();
        for mask in 0u64..(1u64 << m) {
            let mut g = base.clone();
            let v = g.add_vertex();
            for u in 0..m {
                if mask >> u & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let code = canonical_code(&g)?;
            if seen.insert(code.clone()) {
                emit(g, code);
            }
        }
    }
    Ok(())
}

/// Erdős–Rényi graph `G(n, p)` from the supplied generator.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // OEIS A000088
        let expect = [1, 1, 2, 4, 11, 34, 156];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(graphs_of_order(n).unwrap().len(), c, "order {n}");
        }
        // OEIS A001349
        let connected = connected_graphs_up_to(5).unwrap();
        let by_order: Vec<usize> = (1..=5)
            .map(|n| connected.iter().filter(|g| g.order() == n).count())
            .collect();
        assert_eq!(by_order, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn up_to_matches_levels() {
        let all = graphs_up_to(4).unwrap();
        assert_eq!(all.len(), 1 + 1 + 2 + 4 + 11);
    }
}
