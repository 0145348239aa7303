//! Pair families driving `cl(X; F)`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::canon::canonical_code;
use crate::closure::{AnchoredPattern, ConstraintSet, FamilyLabel, PairFamily};
use crate::constructions::complete_path;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::standard::path;
use crate::structure::{blocks, is_solid};

/// Pairs `({a}, P)` with `P` a path of `1..=max_len` edges and `a` an
/// endpoint.
pub fn path_basis(max_len: usize) -> Result<PairFamily> {
    let pairs = (1..=max_len)
        .map(|j| AnchoredPattern::new(path(j), vec![0]))
        .collect::<Result<Vec<_>>>()?;
    PairFamily::new(FamilyLabel::PathBasis, pairs)
}

/// `T + P_j` (a triangle with a path of `j` edges hanging from one corner)
/// for `j = 0..=n`, anchored at each single vertex.
pub fn triangle_path_patterns(n: usize) -> Result<PairFamily> {
    let mut pairs = Vec::new();
    for j in 0..=n {
        let h = complete_path(3, j)?;
        for a in h.vertices() {
            pairs.push(AnchoredPattern::new(h.clone(), vec![a])?);
        }
    }
    PairFamily::new(FamilyLabel::Custom, pairs)
}

/// Single-vertex anchored pairs for solid constraints: `({a}, C[{a} ∪ K])`
/// for every component `K` of `C - a` whenever this is a proper subgraph,
/// together with the refinement over every rooting of the component tree:
/// for a non-root node `t`, pairs with `a` in `C_t` and `H - a` a component
/// of `C^t - a` (where `C^t` is the union of the subtree at `t`), and pairs
/// with `a` in the parent node, adjacent to `C_t` but outside it, and
/// `H - a = C_t`.
///
/// Tree nodes are the blocks with at least three vertices and the single
/// vertices lying on no such block; two nodes are adjacent when they share a
/// vertex or are joined by an edge.
pub fn solidity_basis(cs: &ConstraintSet) -> Result<PairFamily> {
    let mut pairs = Vec::new();
    for (ci, c) in cs.members().iter().enumerate() {
        if !is_solid(c) {
            return Err(Error::NotSolid(ci));
        }
        let all: BTreeSet<usize> = c.vertices().collect();
        for a in c.vertices() {
            for comp in components_without(c, &all, a) {
                push_pair(&mut pairs, c, a, &comp)?;
            }
        }
        let nodes = tree_nodes(c);
        let adj = node_adjacency(c, &nodes);
        for root in 0..nodes.len() {
            let parent = bfs_parents(&adj, root);
            for t in 0..nodes.len() {
                if t == root || parent[t].is_none() {
                    continue;
                }
                let sub = subtree_vertices(&nodes, &parent, t);
                for &a in &nodes[t] {
                    for comp in components_without(c, &sub, a) {
                        push_pair(&mut pairs, c, a, &comp)?;
                    }
                }
                let p = parent[t].expect("checked above");
                let ct: BTreeSet<usize> = nodes[t].iter().copied().collect();
                for &a in &nodes[p] {
                    if !ct.contains(&a) && c.neighbors(a).iter().any(|w| ct.contains(w)) {
                        push_pair(&mut pairs, c, a, &ct)?;
                    }
                }
            }
        }
    }
    PairFamily::new(FamilyLabel::SolidityBasis, pairs)
}

fn push_pair(pairs: &mut Vec<AnchoredPattern>, c: &Graph, a: usize, rest: &BTreeSet<usize>) -> Result<()> {
    let mut verts: Vec<usize> = rest.iter().copied().filter(|&v| v != a).collect();
    verts.insert(0, a);
    let h = c.induced_subgraph(&verts);
    if h.order() < c.order() || h.size() < c.size() {
        pairs.push(AnchoredPattern::new(h, vec![0])?);
    }
    Ok(())
}

/// Components of `c[within] - a`, as vertex sets of `c`.
fn components_without(c: &Graph, within: &BTreeSet<usize>, a: usize) -> Vec<BTreeSet<usize>> {
    let mut seen: HashSet<usize> = HashSet::new();
    let mut out = Vec::new();
    for &s in within {
        if s == a || seen.contains(&s) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen.insert(s);
        while let Some(u) = queue.pop_front() {
            comp.insert(u);
            for &w in c.neighbors(u) {
                if w != a && within.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

fn tree_nodes(c: &Graph) -> Vec<Vec<usize>> {
    let mut nodes: Vec<Vec<usize>> = blocks(c).blocks.into_iter().filter(|b| b.len() >= 3).collect();
    let covered: HashSet<usize> = nodes.iter().flatten().copied().collect();
    for v in c.vertices() {
        if !covered.contains(&v) {
            nodes.push(vec![v]);
        }
    }
    nodes
}

fn node_adjacency(c: &Graph, nodes: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = nodes.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let touch = nodes[i].iter().any(|u| nodes[j].contains(u) || c.neighbors(*u).iter().any(|w| nodes[j].contains(w)));
            if touch {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

fn bfs_parents(adj: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    parent
}

fn subtree_vertices(nodes: &[Vec<usize>], parent: &[Option<usize>], t: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for (s, node) in nodes.iter().enumerate() {
        let mut cur = Some(s);
        while let Some(x) = cur {
            if x == t {
                out.extend(node.iter().copied());
                break;
            }
            cur = parent[x];
        }
    }
    out
}

/// Largest constraint size (in edges) accepted by the subgraph enumeration.
const SUBGRAPH_EDGE_LIMIT: usize = 12;

/// All `(A, H)` with `H` a proper weak subgraph of a member and `A ⊆ H`,
/// `|A| < |C|`, up to anchored isomorphism.
pub fn proper_subgraph_basis(cs: &ConstraintSet) -> Result<PairFamily> {
    let mut pairs = Vec::new();
    for c in cs.members() {
        if c.size() > SUBGRAPH_EDGE_LIMIT {
            return Err(Error::CapExceeded {
                name: "basis",
                limit: SUBGRAPH_EDGE_LIMIT,
                actual: c.size(),
            });
        }
        let mut seen = HashSet::new();
        let n = c.order();
        for vmask in 1u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| vmask >> v & 1 == 1).collect();
            let sub = c.induced_subgraph(&verts);
            let edges = sub.edge_vec();
            for emask in 0u32..(1 << edges.len()) {
                if verts.len() == n && emask == (1 << edges.len()) - 1 {
                    continue;
                }
                let chosen: Vec<(usize, usize)> = (0..edges.len())
                    .filter(|&i| emask >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect();
                let h = Graph::from_edges(verts.len(), &chosen)?;
                if !seen.insert(canonical_code(&h)?) {
                    continue;
                }
                let m = h.order();
                for amask in 0u32..(1 << m) {
                    if (amask.count_ones() as usize) < n {
                        let anchor: Vec<usize> = (0..m).filter(|&v| amask >> v & 1 == 1).collect();
                        pairs.push(AnchoredPattern::new(h.clone(), anchor)?);
                    }
                }
            }
        }
    }
    PairFamily::new(FamilyLabel::ProperSubgraphBasis, pairs)
}
