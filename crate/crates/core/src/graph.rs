//! Finite simple undirected graphs over dense vertex ids `0..order`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple graph. Neighbor lists are kept sorted, so two graphs
/// compare equal exactly when they are the same labelled graph.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

pub type VertexSet = BTreeSet<usize>;

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); order],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge `u v`; returns false if it was already present.
    /// Panics on loops or out-of-range ids.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop edge at {u}");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                true
            }
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    /// The subgraph induced on `vs`, renumbered in the order given.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let mut g = Graph::empty(vs.len());
        for (i, &u) in vs.iter().enumerate() {
            for (j, &v) in vs.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Graph with the vertices of `removed` deleted; remaining vertices keep
    /// their relative order.
    pub fn remove_vertices(&self, removed: &VertexSet) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|v| !removed.contains(v)).collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reachable_avoiding(&self, start: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new();
        if blocked.contains(&start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !blocked.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Relabels by `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Appends a disjoint copy of `other`; returns the id offset of the copy.
    pub fn append(&mut self, other: &Graph) -> usize {
        let offset = self.order();
        for _ in other.vertices() {
            self.add_vertex();
        }
        for (u, v) in other.edges() {
            self.add_edge(u + offset, v + offset);
        }
        offset
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order(), self.edge_vec())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            order: self.order(),
            edges: self.edge_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.order, &r.edges).map_err(serde::de::Error::custom)
    }
}

/// Disjoint union of the vertex sets plus every cross pair. Vertices of `a`
/// keep their ids; those of `b` are shifted by `a.order()`.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.clone();
    let offset = g.append(b);
    for u in a.vertices() {
        for v in b.vertices() {
            g.add_edge(u, v + offset);
        }
    }
    g
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = a.clone();
    g.append(b);
    g
}

/// Disjoint union of `a` and `b` with `va` and `vb` identified. Vertices of
/// `a` keep their ids; the remaining vertices of `b` follow in order.
pub fn vertex_amalgam(a: &Graph, va: usize, b: &Graph, vb: usize) -> Result<Graph> {
    a.check_vertex(va)?;
    b.check_vertex(vb)?;
    let mut g = a.clone();
    let mut map = vec![0; b.order()];
    for v in b.vertices() {
        map[v] = if v == vb { va } else { g.add_vertex() };
    }
    for (u, v) in b.edges() {
        g.add_edge(map[u], map[v]);
    }
    Ok(g)
}

/// Glues `copies` fresh copies of `pattern` minus its anchor onto `base`.
///
/// `pattern_anchor[i]` is a pattern vertex identified with base vertex
/// `anchor_image[i]`. Copies carry only the pattern's edges and are appended
/// copy-major, each copy listing its non-anchor vertices in increasing order.
pub fn free_amalgam(
    base: &Graph,
    pattern: &Graph,
    pattern_anchor: &[usize],
    anchor_image: &[usize],
    copies: usize,
) -> Result<Graph> {
    check_anchor_embedding(base, pattern, pattern_anchor, anchor_image)?;
    let mut g = base.clone();
    let mut map: Vec<Option<usize>> = vec![None; pattern.order()];
    for (&p, &h) in pattern_anchor.iter().zip(anchor_image) {
        map[p] = Some(h);
    }
    for _ in 0..copies {
        let mut m = map.clone();
        for slot in m.iter_mut() {
            if slot.is_none() {
                *slot = Some(g.add_vertex());
            }
        }
        for (u, v) in pattern.edges() {
            let (x, y) = (m[u].unwrap(), m[v].unwrap());
            if pattern_anchor.contains(&u) && pattern_anchor.contains(&v) {
                continue;
            }
            g.add_edge(x, y);
        }
    }
    Ok(g)
}

/// Checks that `pattern_anchor -> anchor_image` is an injective map carrying
/// pattern edges between anchor vertices onto base edges.
pub fn check_anchor_embedding(
    base: &Graph,
    pattern: &Graph,
    pattern_anchor: &[usize],
    anchor_image: &[usize],
) -> Result<()> {
    if pattern_anchor.len() != anchor_image.len() {
        return Err(Error::InvalidEmbedding(format!(
            "anchor has {} vertices but {} images",
            pattern_anchor.len(),
            anchor_image.len()
        )));
    }
    let mut seen_p = VertexSet::new();
    let mut seen_h = VertexSet::new();
    for (&p, &h) in pattern_anchor.iter().zip(anchor_image) {
        pattern.check_vertex(p)?;
        base.check_vertex(h)?;
        if !seen_p.insert(p) || !seen_h.insert(h) {
            return Err(Error::InvalidEmbedding("anchor map is not injective".into()));
        }
    }
    for (i, &p) in pattern_anchor.iter().enumerate() {
        for (j, &q) in pattern_anchor.iter().enumerate().skip(i + 1) {
            if pattern.has_edge(p, q) && !base.has_edge(anchor_image[i], anchor_image[j]) {
                return Err(Error::InvalidEmbedding(format!(
                    "pattern edge {p}-{q} maps to non-edge {}-{}",
                    anchor_image[i], anchor_image[j]
                )));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Text formats

impl Graph {
    /// Edge-list text: `n m` then one `u v` line per edge, `u < v`, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let nums = parse_pair(header, hline)?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(l, line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// DOT export; isolated vertices are listed so the order round-trips.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in self.vertices() {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Parses the DOT subset written by [`Graph::to_dot`]: numeric vertex
    /// statements and `u -- v` edge statements.
    pub fn parse_dot(text: &str) -> Result<Graph> {
        let mut order = 0usize;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim().trim_end_matches(';').trim();
            if line.is_empty() || line.starts_with("graph") || line == "}" || line.starts_with("//") {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            if let Some((a, b)) = line.split_once("--") {
                let u: usize = a.trim().parse().map_err(|_| err("bad vertex id"))?;
                let v: usize = b.trim().parse().map_err(|_| err("bad vertex id"))?;
                order = order.max(u + 1).max(v + 1);
                edges.push((u, v));
            } else {
                let v: usize = line.parse().map_err(|_| err("unsupported statement"))?;
                order = order.max(v + 1);
            }
        }
        Graph::from_edges(order, &edges)
    }
}

fn parse_pair(l: &str, line: usize) -> Result<(usize, usize)> {
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or(Error::Parse {
                line,
                msg: "expected two integers".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line,
                msg: "expected an integer".into(),
            })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}
