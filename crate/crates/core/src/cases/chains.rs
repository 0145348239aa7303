//! ω-values, chains and chain covers for hosts omitting a path.
//!
//! "Infinitely many" disjoint paths is read as "at least `threshold`". The
//! analyses take the threshold explicitly; the usual choice is the size of
//! the ambient constraint.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::closure::{ConstraintSet, FreeTester};
use crate::embed::{for_each_embedding, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::standard::path;
use crate::structure::{longest_path_edges, longest_path_from};

/// Search steps allowed to a single path enumeration or packing search.
const SEARCH_LIMIT: usize = 20_000_000;

/// A chain entry: a vertex, or the formal end `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Vertex(usize),
    Infinity,
}

impl Serialize for End {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            End::Vertex(v) => s.serialize_u64(*v as u64),
            End::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Largest `m` with `threshold` paths of length `m` from `u` to `v` that
/// share only their endpoints (or, for `v = ∞`, `threshold` paths of length
/// `m` from `u` sharing only `u`). Adjacent vertices get at least 1. Paths
/// longer than `|V(g)| - 1` cannot exist, so nothing is cut off.
pub fn omega(g: &Graph, u: usize, v: End, threshold: usize) -> Result<usize> {
    omega_bounded(g, u, v, threshold, g.order().saturating_sub(1))
}

/// [`omega`] restricted to paths of at most `max_len` edges. Exact whenever
/// `g` has no longer paths, e.g. `max_len = k - 1` for a `P_k`-free host.
pub fn omega_bounded(g: &Graph, u: usize, v: End, threshold: usize, max_len: usize) -> Result<usize> {
    g.check_vertex(u)?;
    if threshold == 0 {
        return Err(Error::InvalidParameter("threshold must be positive".into()));
    }
    match v {
        End::Vertex(v) => {
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidParameter(format!("omega needs two distinct vertices, got {u} twice")));
            }
            let base = usize::from(g.has_edge(u, v));
            if disjoint_path_bound(g, u, v) < threshold {
                return Ok(base);
            }
            let by_len = between(g, u, v, max_len)?;
            for (&m, interiors) in by_len.iter().rev() {
                if packs(interiors, threshold, g.order())? {
                    return Ok(m.max(base));
                }
            }
            Ok(base)
        }
        End::Infinity => {
            let by_len = from_vertex(g, u, max_len)?;
            let mut best = 0;
            for (&m, sets) in &by_len {
                if packs(sets, threshold, g.order())? {
                    best = m;
                } else {
                    // a packing at length m truncates to one at every shorter length
                    break;
                }
            }
            Ok(best)
        }
    }
}

/// Interiors of `u`–`v` paths of length at least 2, grouped by length.
fn between(g: &Graph, u: usize, v: usize, max_len: usize) -> Result<BTreeMap<usize, Vec<Vec<usize>>>> {
    let mut out: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    let mut steps = 0;
    let mut on = vec![false; g.order()];
    on[u] = true;
    let mut stack = vec![u];
    walk(g, &mut stack, &mut on, max_len, &mut steps, &mut |p| {
        let last = *p.last().expect("nonempty");
        if last != v {
            return true;
        }
        if p.len() >= 3 {
            let mut interior = p[1..p.len() - 1].to_vec();
            interior.sort_unstable();
            out.entry(p.len() - 1).or_default().insert(interior);
        }
        false
    })?;
    Ok(out.into_iter().map(|(m, s)| (m, s.into_iter().collect())).collect())
}

/// Vertex sets (without `u`) of the paths starting at `u`, grouped by length.
fn from_vertex(g: &Graph, u: usize, max_len: usize) -> Result<BTreeMap<usize, Vec<Vec<usize>>>> {
    let mut out: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    let mut steps = 0;
    let mut on = vec![false; g.order()];
    on[u] = true;
    let mut stack = vec![u];
    walk(g, &mut stack, &mut on, max_len, &mut steps, &mut |p| {
        if p.len() >= 2 {
            let mut rest = p[1..].to_vec();
            rest.sort_unstable();
            out.entry(p.len() - 1).or_default().insert(rest);
        }
        true
    })?;
    Ok(out.into_iter().map(|(m, s)| (m, s.into_iter().collect())).collect())
}

/// Depth-first over simple paths extending `stack`; `visit` sees every
/// path (including the start) and returns whether to extend it.
fn walk<F: FnMut(&[usize]) -> bool>(
    g: &Graph,
    stack: &mut Vec<usize>,
    on: &mut [bool],
    max_len: usize,
    steps: &mut usize,
    visit: &mut F,
) -> Result<()> {
    *steps += 1;
    if *steps > SEARCH_LIMIT {
        return Err(Error::CapExceeded {
            name: "paths",
            limit: SEARCH_LIMIT,
            actual: *steps,
        });
    }
    if !visit(stack) || stack.len() > max_len {
        return Ok(());
    }
    let last = *stack.last().expect("nonempty");
    for &w in g.neighbors(last) {
        if !on[w] {
            on[w] = true;
            stack.push(w);
            walk(g, stack, on, max_len, steps, visit)?;
            stack.pop();
            on[w] = false;
        }
    }
    Ok(())
}

/// Whether `t` of the sets are pairwise disjoint.
fn packs(sets: &[Vec<usize>], t: usize, order: usize) -> Result<bool> {
    if sets.len() < t {
        return Ok(false);
    }
    fn rec(sets: &[Vec<usize>], start: usize, need: usize, used: &mut [bool], steps: &mut usize) -> Result<bool> {
        if need == 0 {
            return Ok(true);
        }
        for i in start..sets.len() {
            if sets.len() - i < need {
                break;
            }
            *steps += 1;
            if *steps > SEARCH_LIMIT {
                return Err(Error::CapExceeded {
                    name: "paths",
                    limit: SEARCH_LIMIT,
                    actual: *steps,
                });
            }
            if sets[i].iter().any(|&v| used[v]) {
                continue;
            }
            for &v in &sets[i] {
                used[v] = true;
            }
            let hit = rec(sets, i + 1, need - 1, used, steps)?;
            for &v in &sets[i] {
                used[v] = false;
            }
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut used = vec![false; order];
    rec(sets, 0, t, &mut used, &mut 0)
}

/// Maximum number of `u`–`v` paths of length at least 2 with disjoint
/// interiors, by augmenting paths on the split-vertex network.
fn disjoint_path_bound(g: &Graph, u: usize, v: usize) -> usize {
    let n = g.order();
    // node 2x is x_in, 2x+1 is x_out; capacity 1 on x_in -> x_out
    let mut cap: HashMap<(usize, usize), i32> = HashMap::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut arc = |a: usize, b: usize, c: i32, cap: &mut HashMap<(usize, usize), i32>| {
        *cap.entry((a, b)).or_insert(0) += c;
        cap.entry((b, a)).or_insert(0);
        adj[a].push(b);
        adj[b].push(a);
    };
    for x in 0..n {
        if x != u && x != v {
            arc(2 * x, 2 * x + 1, 1, &mut cap);
        }
    }
    for (a, b) in g.edges() {
        if (a == u && b == v) || (a == v && b == u) {
            continue;
        }
        arc(2 * a + 1, 2 * b, 1, &mut cap);
        arc(2 * b + 1, 2 * a, 1, &mut cap);
    }
    let (s, t) = (2 * u + 1, 2 * v);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; 2 * n];
        prev[s] = s;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &y in &adj[x] {
                if prev[y] == usize::MAX && cap[&(x, y)] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            return flow;
        }
        let mut y = t;
        while y != s {
            let x = prev[y];
            *cap.get_mut(&(x, y)).expect("arc") -= 1;
            *cap.get_mut(&(y, x)).expect("arc") += 1;
            y = x;
        }
        flow += 1;
    }
}

/// Memoized ω-values on one host.
struct OmegaTable<'a> {
    g: &'a Graph,
    threshold: usize,
    max_len: usize,
    memo: HashMap<(usize, End), usize>,
}

impl<'a> OmegaTable<'a> {
    fn new(g: &'a Graph, threshold: usize, max_len: usize) -> OmegaTable<'a> {
        OmegaTable {
            g,
            threshold,
            max_len,
            memo: HashMap::new(),
        }
    }

    fn get(&mut self, u: usize, v: End) -> Result<usize> {
        let key = match v {
            End::Vertex(w) if w < u => (w, End::Vertex(u)),
            _ => (u, v),
        };
        if let Some(&x) = self.memo.get(&key) {
            return Ok(x);
        }
        let x = omega_bounded(self.g, key.0, key.1, self.threshold, self.max_len)?;
        self.memo.insert(key, x);
        Ok(x)
    }

    /// Vertices `w` with `ω(u, w) ≥ 1`: neighbors, plus vertices joined to
    /// `u` by `threshold` internally disjoint longer paths.
    fn linked(&mut self, u: usize) -> Result<Vec<usize>> {
        let mut reach = VertexSet::new();
        let mut frontier = vec![u];
        for _ in 0..self.max_len {
            let mut next = Vec::new();
            for x in frontier {
                for &w in self.g.neighbors(x) {
                    if w != u && reach.insert(w) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        let mut out = Vec::new();
        for w in reach {
            if self.g.has_edge(u, w) || self.get(u, End::Vertex(w))? >= 1 {
                out.push(w);
            }
        }
        Ok(out)
    }

    fn pair(&mut self, x: End, y: End) -> Result<usize> {
        match (x, y) {
            (End::Vertex(a), b) => self.get(a, b),
            (End::Infinity, End::Vertex(b)) => self.get(b, End::Infinity),
            (End::Infinity, End::Infinity) => Err(Error::InvalidParameter("two infinite entries".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainKind {
    Chain,
    OpenChain,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub sequence: Vec<End>,
    pub kind: ChainKind,
    /// Sum of the consecutive ω-values.
    pub virtual_length: usize,
    /// ω of each consecutive pair.
    pub omega_values: Vec<usize>,
    /// First index pair `(i, j)`, `j ≥ i + 2`, whose inequality fails.
    pub failed_pair: Option<(usize, usize)>,
}

/// Classifies `seq` as a chain (`l ≥ 2` vertices after the first), an open
/// chain (ends in `∞` with at least two vertices before it), or neither.
pub fn chain_classify(g: &Graph, seq: &[End], threshold: usize) -> Result<ChainReport> {
    let mut table = OmegaTable::new(g, threshold, g.order().saturating_sub(1));
    classify_with(&mut table, seq)
}

fn classify_with(table: &mut OmegaTable<'_>, seq: &[End]) -> Result<ChainReport> {
    if seq.len() < 2 {
        return Err(Error::InvalidParameter(format!("a chain needs at least 2 entries, got {}", seq.len())));
    }
    let open = seq.last() == Some(&End::Infinity);
    let finite = if open { &seq[..seq.len() - 1] } else { seq };
    let mut seen = BTreeSet::new();
    for e in finite {
        match e {
            End::Infinity => return Err(Error::InvalidParameter("`inf` may only end a chain".into())),
            End::Vertex(v) => {
                table.g.check_vertex(*v)?;
                if !seen.insert(*v) {
                    return Err(Error::InvalidParameter(format!("vertex {v} repeats in the chain")));
                }
            }
        }
    }
    let omega_values = (0..seq.len() - 1)
        .map(|i| table.pair(seq[i], seq[i + 1]))
        .collect::<Result<Vec<_>>>()?;
    let virtual_length = omega_values.iter().sum();
    let l = finite.len() - 1;
    let long_enough = if open { l >= 1 } else { l >= 2 };
    let mut failed_pair = None;
    let mut ok = long_enough && omega_values.iter().all(|&w| w >= 1);
    if ok {
        'outer: for i in 0..seq.len() {
            let mut sum = omega_values[i..(i + 1).min(omega_values.len())].iter().sum::<usize>();
            for j in i + 2..seq.len() {
                sum += omega_values[j - 1];
                if table.pair(seq[i], seq[j])? >= sum {
                    failed_pair = Some((i, j));
                    ok = false;
                    break 'outer;
                }
            }
        }
    }
    let kind = match (ok, open) {
        (false, _) => ChainKind::Neither,
        (true, false) => ChainKind::Chain,
        (true, true) => ChainKind::OpenChain,
    };
    Ok(ChainReport {
        sequence: seq.to_vec(),
        kind,
        virtual_length,
        omega_values,
        failed_pair,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgAudit {
    pub order: usize,
    pub edges: usize,
    /// Edges of a longest path.
    pub longest_path: usize,
    /// Smallest `l` with no path of `l` edges, i.e. `longest_path + 1`.
    pub l: usize,
    /// `n (l - 1)`, twice the bound on the edge count.
    pub twice_bound: usize,
    /// `2e ≤ n (l - 1)`.
    pub holds: bool,
}

/// Edge count against `n(l-1)/2` for `l` one more than the longest path.
pub fn erdos_gallai_audit(g: &Graph) -> EgAudit {
    let longest = longest_path_edges(g);
    let twice_bound = g.order() * longest;
    EgAudit {
        order: g.order(),
        edges: g.size(),
        longest_path: longest,
        l: longest + 1,
        twice_bound,
        holds: 2 * g.size() <= twice_bound,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainCoverReport {
    pub v: usize,
    pub input: Vec<usize>,
    pub k: usize,
    pub threshold: usize,
    /// One maximum-length path from each input vertex.
    pub paths: Vec<Vec<usize>>,
    /// The greedy family of chains between input vertices.
    pub chains: Vec<Vec<usize>>,
    pub a_prime: Vec<usize>,
    /// `|A' - A|`.
    pub added: usize,
    /// `4|A' - A| < k³|A|`, or both sides zero.
    pub bound_ok: bool,
    /// Every chain or open chain from `A`, up to `k + 1` vertices, leaving
    /// `A` meets `A' - A`.
    pub covering_ok: bool,
    pub counterexample: Option<Vec<End>>,
}

/// Which inequality a free-making sequence broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceCondition {
    /// `ω(v_i, v_{i+1}) ≥ 1`.
    Linked,
    /// `ω(v_i, v_j) < Σ_{i≤r<j} ω(v_r, v_{r+1})` for `j ≥ i + 2`.
    Pairs,
    /// `ω(v_i, ∞) < Σ_{i≤r<l} ω(v_r, v_{r+1}) + ω(v_l, ∞)` for `i < l`.
    Tail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceFailure {
    pub path: Vec<usize>,
    /// `v` followed by the minimal set `B`, in path order.
    pub sequence: Vec<usize>,
    pub condition: SequenceCondition,
    /// Positions `(i, j)` in `sequence`; `j` is `l + 1` for the tail form.
    pub at: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeSequenceAudit {
    pub v: usize,
    pub k: usize,
    pub threshold: usize,
    pub paths: usize,
    pub sequences: usize,
    pub holds: bool,
    pub counterexample: Option<SequenceFailure>,
}

/// For every path `Q` of at most `k - 1` edges starting at `v` and every
/// minimal `B ⊆ Q - {v}` over which (with `v`) `Q` is free, checks the
/// chain inequalities on `(v, B)` in path order, with `k + 1` copies for
/// freeness. Stops at the first failure.
pub fn free_sequence_audit(g: &Graph, v: usize, k: usize, threshold: usize) -> Result<FreeSequenceAudit> {
    g.check_vertex(v)?;
    if k < 2 {
        return Err(Error::InvalidParameter("path bound must be at least 2".into()));
    }
    let cs = ConstraintSet::single(path(k))?;
    if cs.first_violation(g).is_some() {
        return Err(Error::ConstraintViolated(0));
    }
    let tester = FreeTester::new(g, &cs, cs.k());
    let mut table = OmegaTable::new(g, threshold, k - 1);
    let anchor: VertexSet = [v].into_iter().collect();
    let mut audit = FreeSequenceAudit {
        v,
        k,
        threshold,
        paths: 0,
        sequences: 0,
        holds: true,
        counterexample: None,
    };
    for len in 1..k {
        let pattern = path(len);
        let mut occs = Vec::new();
        for_each_embedding(&pattern, g, EmbeddingMode::Weak, &[(0, v)], |m| {
            occs.push(m.to_vec());
            ControlFlow::Continue(())
        })?;
        for occ in occs {
            audit.paths += 1;
            for b in tester.minimal_sets(&anchor, &pattern, &occ) {
                audit.sequences += 1;
                let sequence: Vec<usize> = occ.iter().copied().filter(|x| *x == v || b.contains(x)).collect();
                if let Some((condition, at)) = sequence_failure(&mut table, &sequence)? {
                    audit.holds = false;
                    audit.counterexample = Some(SequenceFailure {
                        path: occ,
                        sequence,
                        condition,
                        at,
                    });
                    return Ok(audit);
                }
            }
        }
    }
    Ok(audit)
}

fn sequence_failure(table: &mut OmegaTable<'_>, seq: &[usize]) -> Result<Option<(SequenceCondition, (usize, usize))>> {
    let l = seq.len() - 1;
    let mut steps = Vec::with_capacity(l);
    for i in 0..l {
        let w = table.get(seq[i], End::Vertex(seq[i + 1]))?;
        if w == 0 {
            return Ok(Some((SequenceCondition::Linked, (i, i + 1))));
        }
        steps.push(w);
    }
    for i in 0..l {
        let mut sum = steps[i];
        for j in i + 2..=l {
            sum += steps[j - 1];
            if table.get(seq[i], End::Vertex(seq[j]))? >= sum {
                return Ok(Some((SequenceCondition::Pairs, (i, j))));
            }
        }
    }
    if l > 0 {
        let tail = table.get(seq[l], End::Infinity)?;
        for i in 0..l {
            let sum: usize = steps[i..].iter().sum::<usize>() + tail;
            if table.get(seq[i], End::Infinity)? >= sum {
                return Ok(Some((SequenceCondition::Tail, (i, l + 1))));
            }
        }
    }
    Ok(None)
}

/// Builds `A'` from maximum paths at each `a ∈ A` and a greedy family of
/// chains with endpoints in `A` whose other vertices avoid each other and
/// the paths, then searches exhaustively for an uncovered chain.
///
/// Membership of `a` in `cl_1(v)` is not checked.
pub fn chain_cover(g: &Graph, v: usize, a: &VertexSet, k: usize, threshold: usize) -> Result<ChainCoverReport> {
    g.check_vertex(v)?;
    for &x in a {
        g.check_vertex(x)?;
    }
    if k == 0 {
        return Err(Error::InvalidParameter("path bound must be positive".into()));
    }
    let cs = ConstraintSet::single(path(k))?;
    if cs.first_violation(g).is_some() {
        return Err(Error::ConstraintViolated(0));
    }
    let mut table = OmegaTable::new(g, threshold, k - 1);
    let paths: Vec<Vec<usize>> = a.iter().map(|&x| longest_path_from(g, x)).collect();
    let mut used: VertexSet = paths.iter().flatten().copied().collect();
    used.extend(a.iter().copied());

    let mut chains: Vec<Vec<usize>> = Vec::new();
    for &start in a {
        let mut found = Vec::new();
        chains_from(&mut table, &mut vec![start], k + 1, a, &mut found)?;
        for c in found {
            if c[1..c.len() - 1].iter().all(|x| !used.contains(x)) {
                used.extend(c[1..c.len() - 1].iter().copied());
                chains.push(c);
            }
        }
    }
    let mut a_prime: VertexSet = a.clone();
    a_prime.extend(paths.iter().flatten().copied());
    a_prime.extend(chains.iter().flatten().copied());
    let added = a_prime.len() - a.len();
    let bound_ok = if a.is_empty() { added == 0 } else { 4 * added < k * k * k * a.len() };

    let fresh: VertexSet = a_prime.difference(a).copied().collect();
    let mut counterexample = None;
    'starts: for &start in a {
        let mut seq = vec![start];
        let mut open_hit = None;
        let mut closed_hit = Vec::new();
        uncovered(&mut table, &mut seq, k + 1, a, &fresh, &mut closed_hit, &mut open_hit)?;
        if let Some(c) = closed_hit.into_iter().next() {
            counterexample = Some(c.into_iter().map(End::Vertex).collect());
            break 'starts;
        }
        if let Some(c) = open_hit {
            let mut seq: Vec<End> = c.into_iter().map(End::Vertex).collect();
            seq.push(End::Infinity);
            counterexample = Some(seq);
            break 'starts;
        }
    }

    Ok(ChainCoverReport {
        v,
        input: a.iter().copied().collect(),
        k,
        threshold,
        paths,
        chains,
        a_prime: a_prime.into_iter().collect(),
        added,
        bound_ok,
        covering_ok: counterexample.is_none(),
        counterexample,
    })
}

/// Whether appending `w` to the chain prefix `seq` keeps every inequality
/// with `w` as the right end.
fn extends(table: &mut OmegaTable<'_>, seq: &[usize], w: End) -> Result<bool> {
    let j = seq.len();
    let mut sum = table.pair(End::Vertex(seq[j - 1]), w)?;
    if sum == 0 {
        return Ok(false);
    }
    for i in (0..j.saturating_sub(1)).rev() {
        sum += table.get(seq[i], End::Vertex(seq[i + 1]))?;
        if table.pair(End::Vertex(seq[i]), w)? >= sum {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Chains from `seq[0]` to another vertex of `a` with all interior
/// vertices outside `a`, in lexicographic order.
fn chains_from(
    table: &mut OmegaTable<'_>,
    seq: &mut Vec<usize>,
    max_vertices: usize,
    a: &VertexSet,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if seq.len() >= max_vertices {
        return Ok(());
    }
    let last = *seq.last().expect("nonempty");
    for w in table.linked(last)? {
        if seq.contains(&w) || !extends(table, seq, End::Vertex(w))? {
            continue;
        }
        seq.push(w);
        if !a.contains(&w) {
            chains_from(table, seq, max_vertices, a, out)?;
        } else if seq.len() >= 3 {
            out.push(seq.clone());
        }
        seq.pop();
    }
    Ok(())
}

/// Chains and open chains from `seq[0]` avoiding `fresh` and leaving `a`.
fn uncovered(
    table: &mut OmegaTable<'_>,
    seq: &mut Vec<usize>,
    max_vertices: usize,
    a: &VertexSet,
    fresh: &VertexSet,
    closed: &mut Vec<Vec<usize>>,
    open: &mut Option<Vec<usize>>,
) -> Result<()> {
    if !closed.is_empty() || open.is_some() {
        return Ok(());
    }
    let leaves = seq.iter().any(|x| !a.contains(x));
    if seq.len() >= 2 && leaves && extends(table, seq, End::Infinity)? {
        *open = Some(seq.clone());
        return Ok(());
    }
    if seq.len() >= max_vertices {
        return Ok(());
    }
    let last = *seq.last().expect("nonempty");
    for w in table.linked(last)? {
        if fresh.contains(&w) || seq.contains(&w) || !extends(table, seq, End::Vertex(w))? {
            continue;
        }
        seq.push(w);
        if seq.len() >= 3 && a.contains(&w) && seq.iter().any(|x| !a.contains(x)) {
            closed.push(seq.clone());
            seq.pop();
            return Ok(());
        }
        uncovered(table, seq, max_vertices, a, fresh, closed, open)?;
        seq.pop();
        if !closed.is_empty() || open.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::{complete, complete_bipartite, cycle};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn omega_examples() {
        let k25 = complete_bipartite(2, 5);
        assert_eq!(omega(&k25, 0, End::Vertex(1), 5).unwrap(), 2);
        assert_eq!(omega(&k25, 0, End::Vertex(1), 6).unwrap(), 0);
        assert_eq!(omega(&complete(2), 0, End::Vertex(1), 7).unwrap(), 1);
        let c5 = cycle(5).unwrap();
        assert_eq!(omega(&c5, 0, End::Vertex(2), 2).unwrap(), 0);
        assert_eq!(omega(&c5, 0, End::Vertex(2), 1).unwrap(), 3);
        assert!(omega(&c5, 0, End::Vertex(0), 1).is_err());
        assert!(omega(&c5, 0, End::Vertex(1), 0).is_err());
    }

    #[test]
    fn omega_at_infinity() {
        // a star with 3 legs of 2 edges
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(omega(&g, 0, End::Infinity, 3).unwrap(), 2);
        assert_eq!(omega(&g, 0, End::Infinity, 4).unwrap(), 0);
        assert_eq!(omega(&g, 2, End::Infinity, 1).unwrap(), 4);
    }

    #[test]
    fn flow_bound_matches_packing() {
        let k25 = complete_bipartite(2, 5);
        assert_eq!(disjoint_path_bound(&k25, 0, 1), 5);
        assert_eq!(disjoint_path_bound(&cycle(6).unwrap(), 0, 3), 2);
        assert_eq!(disjoint_path_bound(&complete(2), 0, 1), 0);
    }

    #[test]
    fn classification() {
        let g = cycle(5).unwrap();
        let two = chain_classify(&g, &[End::Vertex(0), End::Vertex(1)], 1).unwrap();
        assert_eq!(two.kind, ChainKind::Neither);
        // two K_{2,5} sharing a hub: hubs 0 - 1 - 2
        let mut edges = Vec::new();
        for m in 3..8 {
            edges.extend([(0, m), (1, m)]);
        }
        for m in 8..13 {
            edges.extend([(1, m), (2, m)]);
        }
        let h = Graph::from_edges(13, &edges).unwrap();
        let hub = 2;
        assert_eq!(omega(&h, 0, End::Vertex(1), 5).unwrap(), 2);
        assert_eq!(omega(&h, 1, End::Vertex(hub), 5).unwrap(), 2);
        let r = chain_classify(&h, &[End::Vertex(0), End::Vertex(1), End::Vertex(hub)], 5).unwrap();
        assert_eq!(r.virtual_length, 4);
        let direct = omega(&h, 0, End::Vertex(hub), 5).unwrap();
        assert_eq!(r.kind == ChainKind::Chain, direct < 4);
        let open = chain_classify(&g, &[End::Vertex(0), End::Infinity], 1).unwrap();
        assert_eq!(open.kind, ChainKind::Neither);
        assert_eq!(open.virtual_length, 4);
        assert!(chain_classify(&g, &[End::Vertex(0)], 1).is_err());
    }

    #[test]
    fn erdos_gallai_examples() {
        let c5 = erdos_gallai_audit(&cycle(5).unwrap());
        assert_eq!((c5.longest_path, c5.edges, c5.twice_bound), (4, 5, 20));
        let k4 = erdos_gallai_audit(&complete(4));
        assert_eq!((k4.longest_path, 2 * k4.edges, k4.twice_bound), (3, 12, 12));
        assert!(k4.holds);
        let e = erdos_gallai_audit(&Graph::empty(0));
        assert_eq!((e.longest_path, e.edges), (0, 0));
        assert!(e.holds);
    }

    #[test]
    fn cover_examples() {
        let c4 = cycle(4).unwrap();
        let r = chain_cover(&c4, 0, &set(&[0]), 4, 5).unwrap();
        assert!(r.added <= 3 && r.bound_ok);
        let empty = chain_cover(&c4, 0, &VertexSet::new(), 4, 5).unwrap();
        assert!(empty.a_prime.is_empty() && empty.bound_ok && empty.covering_ok);
        let p = path(3);
        let r = chain_cover(&p, 0, &set(&[0]), 4, 5).unwrap();
        assert_eq!(r.paths, vec![vec![0, 1, 2, 3]]);
        assert!(r.chains.is_empty());
        assert!(chain_cover(&path(4), 0, &set(&[0]), 4, 5).is_err());
    }
}
