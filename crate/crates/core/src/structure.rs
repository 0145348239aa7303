//! Blocks, solidity, vertex connectivity, longest paths and exact coloring.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Biconnected decomposition. Bridges are two-vertex blocks and isolated
/// vertices are singleton blocks. `tree` is the block-cut tree as pairs
/// `(block index, cut vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].binary_search(&v).is_ok())
            .collect()
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();
    let mut is_cut = vec![false; n];

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            raw_blocks.push(vec![root]);
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = VertexSet::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        raw_blocks.push(block.into_iter().collect());
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    raw_blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut tree = Vec::new();
    for (i, b) in raw_blocks.iter().enumerate() {
        for &c in &cut_vertices {
            if b.binary_search(&c).is_ok() {
                tree.push((i, c));
            }
        }
    }
    BlockDecomposition {
        blocks: raw_blocks,
        cut_vertices,
        tree,
    }
}

/// Every induced 2-connected subgraph is complete, equivalently every block
/// is complete.
pub fn is_solid(g: &Graph) -> bool {
    blocks(g).blocks.iter().all(|b| {
        b.iter()
            .enumerate()
            .all(|(i, &u)| b[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

/// More than `k` vertices and connected after deleting any `k - 1` of them.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "connectivity order must be positive");
    let n = g.order();
    if n <= k {
        return false;
    }
    let mut chosen = Vec::with_capacity(k - 1);
    fn rec(g: &Graph, need: usize, start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == need {
            let removed: VertexSet = chosen.iter().copied().collect();
            return g.remove_vertices(&removed).is_connected();
        }
        for v in start..g.order() {
            chosen.push(v);
            let ok = rec(g, need, v + 1, chosen);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    rec(g, k - 1, 0, &mut chosen)
}

/// Maximum number of edges over all simple paths.
pub fn longest_path_edges(g: &Graph) -> usize {
    let n = g.order();
    let mut best = 0;
    let mut on = vec![false; n];
    fn dfs(g: &Graph, u: usize, len: usize, on: &mut [bool], best: &mut usize) -> bool {
        if len > *best {
            *best = len;
        }
        if *best + 1 == g.order() {
            return true;
        }
        for &w in g.neighbors(u) {
            if !on[w] {
                on[w] = true;
                let done = dfs(g, w, len + 1, on, best);
                on[w] = false;
                if done {
                    return true;
                }
            }
        }
        false
    }
    for s in g.vertices() {
        on[s] = true;
        let done = dfs(g, s, 0, &mut on, &mut best);
        on[s] = false;
        if done {
            break;
        }
    }
    best
}

/// A maximum-length path starting at `start`, first in lexicographic order
/// of vertex sequences among those of maximum length.
pub fn longest_path_from(g: &Graph, start: usize) -> Vec<usize> {
    let mut best: Vec<usize> = vec![start];
    let mut cur = vec![start];
    let mut on = vec![false; g.order()];
    on[start] = true;
    fn dfs(g: &Graph, cur: &mut Vec<usize>, on: &mut [bool], best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        let u = *cur.last().unwrap();
        for &w in g.neighbors(u) {
            if !on[w] {
                on[w] = true;
                cur.push(w);
                dfs(g, cur, on, best);
                cur.pop();
                on[w] = false;
            }
        }
    }
    dfs(g, &mut cur, &mut on, &mut best);
    best
}

/// Exact chromatic number by backtracking over colorings with symmetry
/// breaking (a new color is only opened as the next unused index).
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if g.size() == 0 {
        return 1;
    }
    // vertices by decreasing degree
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = greedy_clique(g, &order);
    (lower..=n).find(|&k| colorable(g, &order, k)).unwrap_or(n)
}

pub fn is_colorable(g: &Graph, k: usize) -> bool {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    colorable(g, &order, k)
}

fn greedy_clique(g: &Graph, order: &[usize]) -> usize {
    let mut best = 1;
    for &s in order {
        let mut clique = vec![s];
        for &v in order {
            if v != s && clique.iter().all(|&c| g.has_edge(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    let mut color = vec![usize::MAX; g.order()];
    fn rec(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, color: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        for c in 0..k.min(used + 1) {
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if rec(g, order, i + 1, k, used.max(c + 1), color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    rec(g, order, 0, k, 0, &mut color)
}

/// All triangles as sorted triples, lexicographically ordered.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out.sort();
    out
}

/// All cliques of exactly `size` vertices as sorted vertex lists, in
/// lexicographic order.
pub fn cliques(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    fn rec(g: &Graph, size: usize, cur: &mut Vec<usize>, cand: &[usize], out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for (i, &v) in cand.iter().enumerate() {
            if cur.len() + cand.len() - i < size {
                break;
            }
            let next: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            cur.push(v);
            rec(g, size, cur, &next, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let all: Vec<usize> = g.vertices().collect();
    rec(g, size, &mut Vec::new(), &all, &mut out);
    out
}

/// Number of triangles containing the edge `u v`.
pub fn triangles_on_edge(g: &Graph, u: usize, v: usize) -> usize {
    g.neighbors(u).iter().filter(|&&w| w != v && g.has_edge(v, w)).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_amalgam;
    use crate::standard::{complete, complete_bipartite, cycle, path};

    fn bowtie() -> Graph {
        vertex_amalgam(&complete(3), 0, &complete(3), 0).unwrap()
    }

    #[test]
    fn clique_lists() {
        assert_eq!(cliques(&complete(4), 3).len(), 4);
        assert_eq!(cliques(&bowtie(), 3), vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert!(cliques(&cycle(5).unwrap(), 3).is_empty());
        assert_eq!(cliques(&path(2), 2), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn block_examples() {
        let b = blocks(&bowtie());
        assert_eq!(b.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(b.cut_vertices, vec![0]);
        assert_eq!(b.tree, vec![(0, 0), (1, 0)]);
        let k5 = blocks(&complete(5));
        assert_eq!(k5.blocks.len(), 1);
        assert!(k5.cut_vertices.is_empty());
        let p3 = blocks(&path(3));
        assert_eq!(p3.blocks.len(), 3);
        assert_eq!(p3.cut_vertices, vec![1, 2]);
        let iso = blocks(&Graph::empty(2));
        assert_eq!(iso.blocks, vec![vec![0], vec![1]]);
    }

    #[test]
    fn solidity() {
        assert!(is_solid(&bowtie()));
        assert!(!is_solid(&cycle(5).unwrap()));
        let knk3 = vertex_amalgam(&complete(4), 3, &complete(3), 0).unwrap();
        assert!(is_solid(&knk3));
        assert!(is_solid(&path(4)));
    }

    #[test]
    fn connectivity() {
        assert!(is_k_connected(&cycle(5).unwrap(), 2));
        assert!(is_k_connected(&complete_bipartite(3, 3), 3));
        assert!(!is_k_connected(&complete_bipartite(3, 3), 4));
        assert!(!is_k_connected(&bowtie(), 2));
        assert!(is_k_connected(&complete(4), 3));
        assert!(!is_k_connected(&complete(3), 3));
    }

    #[test]
    fn longest_paths() {
        for k in 3..8 {
            assert_eq!(longest_path_edges(&cycle(k).unwrap()), k - 1);
        }
        assert_eq!(longest_path_edges(&complete(4)), 3);
        assert_eq!(longest_path_edges(&bowtie()), 4);
        assert_eq!(longest_path_edges(&Graph::empty(3)), 0);
        assert_eq!(longest_path_from(&path(3), 0), vec![0, 1, 2, 3]);
        assert_eq!(longest_path_from(&path(3), 1), vec![1, 2, 3]);
    }

    #[test]
    fn coloring() {
        assert_eq!(chromatic_number(&cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&cycle(6).unwrap()), 2);
        assert_eq!(chromatic_number(&complete(5)), 5);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn triangle_listing() {
        assert_eq!(triangles(&bowtie()), vec![[0, 1, 2], [0, 3, 4]]);
        assert_eq!(triangles(&complete(4)).len(), 4);
        assert_eq!(triangles_on_edge(&complete(4), 0, 1), 2);
    }
}
