//! Finite approximants to existentially complete constrained graphs, built
//! by adjoining free extensions over small anchors.
//!
//! Only free amalgams are realized: an extension `B` of an anchor `A` is
//! glued on with no edges between its new vertices and the rest of the
//! host. Extensions that would need identified vertices or cross edges are
//! never attempted, so the output approximates an existentially complete
//! graph from below.
//!
//! A round processes host vertices one at a time in connected-growth order
//! (the least unprocessed vertex adjacent to a processed one, else the least
//! unprocessed vertex). Processing `m` handles every anchor made of `m` and
//! earlier processed vertices. Analyses on an approximant are meaningful on
//! the vertices processed in the last round.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canon::{canonical_code_colored, CanonicalCode};
use crate::closure::{omits, ConstraintSet};
use crate::embed::{find_embedding, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::{free_amalgam, Graph, VertexSet};

/// Which vertices a round processes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sweep {
    /// The vertices present when the round starts.
    Snapshot,
    /// Also the vertices added during the round, until the cap.
    Frontier,
}

#[derive(Debug, Clone)]
pub struct BuildConfig {
    pub constraints: ConstraintSet,
    pub rounds: usize,
    /// Largest extension `B`, counting the anchor.
    pub extension_budget: usize,
    /// Largest anchor `A`.
    pub anchor_budget: usize,
    /// Hard cap on the order of the result.
    pub vertex_cap: usize,
    /// Permutes the screening order of pattern catalogs; never the output.
    pub seed: u64,
    /// Start graph; `K_1` when absent.
    pub start: Option<Graph>,
    pub sweep: Sweep,
}

impl BuildConfig {
    /// Anchor budget 2, extension budget 4, 2 snapshot rounds, cap 300.
    pub fn new(constraints: ConstraintSet) -> BuildConfig {
        BuildConfig {
            constraints,
            rounds: 2,
            extension_budget: 4,
            anchor_budget: 2,
            vertex_cap: 300,
            seed: 0,
            start: None,
            sweep: Sweep::Snapshot,
        }
    }

    fn start_graph(&self) -> Graph {
        self.start.clone().unwrap_or_else(|| Graph::empty(1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.extension_budget == 0 || self.anchor_budget == 0 {
            return Err(Error::InvalidParameter("budgets must be at least 1".into()));
        }
        let start = self.start_graph().order();
        if self.vertex_cap < start {
            return Err(Error::InvalidParameter(format!(
                "vertex cap {} is below the start order {start}",
                self.vertex_cap
            )));
        }
        Ok(())
    }
}

/// An extension problem: pattern vertices `0..anchor.len()` sit on
/// `anchor`, the rest are new.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realized {
    pub anchor: Vec<usize>,
    pub pattern: Graph,
    /// Host vertices given to the new pattern vertices.
    pub placement: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    AmalgamViolatesConstraints,
    Cap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub anchor: Vec<usize>,
    pub pattern: CanonicalCode,
    pub reason: SkipReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundTrace {
    pub start_order: usize,
    pub end_order: usize,
    /// Problems already solved inside the host.
    pub already_realized: usize,
    pub realized: Vec<Realized>,
    pub skipped: Vec<Skipped>,
    /// The vertex cap stopped the round early.
    pub capped: bool,
    /// Fully processed vertices, in processing order.
    pub processed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ApproximantTrace {
    pub rounds: Vec<RoundTrace>,
}

impl ApproximantTrace {
    pub fn realized(&self) -> impl Iterator<Item = &Realized> {
        self.rounds.iter().flat_map(|r| r.realized.iter())
    }

    /// Vertices processed in the last round; empty when no round ran.
    pub fn processed(&self) -> VertexSet {
        self.rounds.last().map(|r| r.processed.iter().copied().collect()).unwrap_or_default()
    }
}

/// Extension patterns over one anchor type, keyed by anchored code.
type Catalog = Vec<(CanonicalCode, Graph)>;

struct Catalogs {
    cs: ConstraintSet,
    extension_budget: usize,
    rng: ChaCha8Rng,
    by_type: HashMap<Graph, Catalog>,
}

impl Catalogs {
    fn new(cfg: &BuildConfig) -> Catalogs {
        Catalogs {
            cs: cfg.constraints.clone(),
            extension_budget: cfg.extension_budget,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            by_type: HashMap::new(),
        }
    }

    /// Every `cs`-free graph on `|A| + j` vertices (`j ≥ 1`, total within
    /// the budget) agreeing with `anchor` on the first `|A|` vertices, one
    /// per anchored isomorphism class, in code order.
    fn get(&mut self, anchor: &Graph) -> Result<&Catalog> {
        if !self.by_type.contains_key(anchor) {
            let catalog = self.build(anchor)?;
            self.by_type.insert(anchor.clone(), catalog);
        }
        Ok(&self.by_type[anchor])
    }

    fn build(&mut self, anchor: &Graph) -> Result<Catalog> {
        let a = anchor.order();
        let mut found: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for total in a + 1..=self.extension_budget {
            let pairs: Vec<(usize, usize)> = (a..total).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            if pairs.len() >= 32 {
                return Err(Error::CapExceeded {
                    name: "extension",
                    limit: 31,
                    actual: pairs.len(),
                });
            }
            let colors: Vec<u8> = (0..total).map(|v| if v < a { v as u8 + 1 } else { 0 }).collect();
            let mut masks: Vec<u32> = (0..1u32 << pairs.len()).collect();
            // screening order is seed-dependent; the catalog is sorted below
            masks.shuffle(&mut self.rng);
            for mask in masks {
                let mut edges = anchor.edge_vec();
                edges.extend((0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]));
                let b = Graph::from_edges(total, &edges)?;
                let code = canonical_code_colored(&b, &colors)?;
                if found.contains_key(&code) || !omits(&b, &self.cs) {
                    continue;
                }
                found.insert(code, canonical_representative(&b, a)?);
            }
        }
        Ok(found.into_iter().collect())
    }
}

/// The least labelled graph (by sorted edge list) in the anchored class of
/// `b`, permuting only the vertices after the first `fixed`. Makes the
/// catalog independent of the screening order.
fn canonical_representative(b: &Graph, fixed: usize) -> Result<Graph> {
    let free: Vec<usize> = (fixed..b.order()).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut perm = free.clone();
    permute(&mut perm, 0, &mut |p| {
        let mut map: Vec<usize> = (0..b.order()).collect();
        for (i, &v) in free.iter().enumerate() {
            map[v] = p[i];
        }
        let mut edges: Vec<(usize, usize)> = b
            .edges()
            .map(|(x, y)| (map[x].min(map[y]), map[x].max(map[y])))
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|e| edges < *e) {
            best = Some(edges);
        }
    });
    Graph::from_edges(b.order(), &best.unwrap_or_default())
}

fn permute<F: FnMut(&[usize])>(items: &mut [usize], k: usize, f: &mut F) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Anchors made of `m` and fewer than `budget` of the `done` vertices, as
/// sorted tuples in lexicographic order.
fn anchor_group(m: usize, done: &[usize], budget: usize) -> Vec<Vec<usize>> {
    let mut group = Vec::new();
    for size in 0..budget {
        for mut s in crate::constructions::subsets(done.to_vec(), size) {
            s.push(m);
            s.sort_unstable();
            group.push(s);
        }
    }
    group.sort();
    group
}

/// One saturation round. The empty anchor comes first, then each vertex in
/// connected-growth order with its anchors. Per anchor the patterns of its
/// type are taken in code order: a problem already solved by an induced
/// extension in the current host is left alone; otherwise the free amalgam
/// is adjoined when it omits the constraints.
pub fn saturate_round(g: &Graph, cfg: &BuildConfig) -> Result<(Graph, RoundTrace)> {
    saturate_with(g, cfg, &mut Catalogs::new(cfg))
}

fn saturate_with(g: &Graph, cfg: &BuildConfig, catalogs: &mut Catalogs) -> Result<(Graph, RoundTrace)> {
    cfg.validate()?;
    if let Some(i) = cfg.constraints.first_violation(g) {
        return Err(Error::ConstraintViolated(i));
    }
    if g.order() > cfg.vertex_cap {
        return Err(Error::InvalidParameter(format!(
            "host order {} exceeds the vertex cap {}",
            g.order(),
            cfg.vertex_cap
        )));
    }
    let mut round = Round {
        cfg,
        host: g.clone(),
        trace: RoundTrace {
            start_order: g.order(),
            end_order: g.order(),
            already_realized: 0,
            realized: Vec::new(),
            skipped: Vec::new(),
            capped: false,
            processed: Vec::new(),
        },
    };
    let pool = |host: &Graph| match cfg.sweep {
        Sweep::Snapshot => g.order(),
        Sweep::Frontier => host.order(),
    };
    let mut marked: Vec<bool> = vec![false; g.order()];
    let mut frontier: BTreeSet<usize> = BTreeSet::new();
    let mut scan = 0;
    if round.handle(&[], catalogs)?.is_some() {
        loop {
            let limit = pool(&round.host);
            marked.resize(round.host.order(), false);
            let next = match frontier.pop_first() {
                Some(v) => Some(v),
                None => {
                    while scan < limit && marked[scan] {
                        scan += 1;
                    }
                    (scan < limit).then_some(scan)
                }
            };
            let Some(m) = next else { break };
            marked[m] = true;
            let before = round.host.order();
            let mut complete = true;
            for anchor in anchor_group(m, &round.trace.processed, cfg.anchor_budget) {
                if round.handle(&anchor, catalogs)?.is_none() {
                    complete = false;
                    break;
                }
            }
            if !complete {
                break;
            }
            round.trace.processed.push(m);
            let limit = pool(&round.host);
            marked.resize(round.host.order(), false);
            let mut touched: Vec<usize> = round.host.neighbors(m).to_vec();
            touched.extend(before..round.host.order());
            for w in touched {
                if w < limit && !marked[w] && round.host.neighbors(w).iter().any(|&x| marked[x]) {
                    frontier.insert(w);
                }
            }
        }
    }
    let mut trace = round.trace;
    trace.end_order = round.host.order();
    Ok((round.host, trace))
}

struct Round<'a> {
    cfg: &'a BuildConfig,
    host: Graph,
    trace: RoundTrace,
}

impl Round<'_> {
    /// All patterns over one anchor; `None` when the cap stopped the round.
    fn handle(&mut self, anchor: &[usize], catalogs: &mut Catalogs) -> Result<Option<()>> {
        let anchor_type = self.host.induced_subgraph(anchor);
        let partial: Vec<(usize, usize)> = anchor.iter().copied().enumerate().collect();
        let pattern_anchor: Vec<usize> = (0..anchor.len()).collect();
        for (code, pattern) in catalogs.get(&anchor_type)? {
            if find_embedding(pattern, &self.host, EmbeddingMode::Induced, &partial)?.is_some() {
                self.trace.already_realized += 1;
                continue;
            }
            if self.host.order() + pattern.order() - anchor.len() > self.cfg.vertex_cap {
                self.trace.skipped.push(Skipped {
                    anchor: anchor.to_vec(),
                    pattern: code.clone(),
                    reason: SkipReason::Cap,
                });
                self.trace.capped = true;
                return Ok(None);
            }
            let amalgam = free_amalgam(&self.host, pattern, &pattern_anchor, anchor, 1)?;
            let placement: Vec<usize> = (self.host.order()..amalgam.order()).collect();
            if self.cfg.constraints.violated_touching(&amalgam, &placement) {
                self.trace.skipped.push(Skipped {
                    anchor: anchor.to_vec(),
                    pattern: code.clone(),
                    reason: SkipReason::AmalgamViolatesConstraints,
                });
                continue;
            }
            self.host = amalgam;
            self.trace.realized.push(Realized {
                anchor: anchor.to_vec(),
                pattern: pattern.clone(),
                placement,
            });
        }
        Ok(Some(()))
    }
}

/// Runs `cfg.rounds` saturation rounds from the start graph, stopping
/// after a round that hit the vertex cap.
pub fn build_approximant(cfg: &BuildConfig) -> Result<(Graph, ApproximantTrace)> {
    cfg.validate()?;
    let mut catalogs = Catalogs::new(cfg);
    let mut g = cfg.start_graph();
    let mut trace = ApproximantTrace { rounds: Vec::new() };
    for _ in 0..cfg.rounds {
        let (next, round) = saturate_with(&g, cfg, &mut catalogs)?;
        g = next;
        let capped = round.capped;
        trace.rounds.push(round);
        if capped {
            break;
        }
    }
    Ok((g, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::embeds;
    use crate::standard::{complete, cycle};

    fn cfg(c: Graph, rounds: usize, anchor: usize, ext: usize) -> BuildConfig {
        BuildConfig {
            rounds,
            anchor_budget: anchor,
            extension_budget: ext,
            ..BuildConfig::new(ConstraintSet::single(c).unwrap())
        }
    }

    #[test]
    fn one_round_from_a_vertex() {
        let (g, trace) = build_approximant(&cfg(complete(3), 1, 1, 2)).unwrap();
        assert!(g.size() >= 1);
        assert!(g.vertices().any(|u| g.vertices().any(|v| u != v && !g.has_edge(u, v))));
        assert_eq!(trace.rounds.len(), 1);
    }

    #[test]
    fn triangle_free_rounds_make_a_pentagon() {
        let (g, _) = build_approximant(&cfg(complete(3), 2, 2, 3)).unwrap();
        assert!(omits(&g, &ConstraintSet::single(complete(3)).unwrap()));
        assert!(embeds(&cycle(5).unwrap(), &g, EmbeddingMode::Weak));
    }

    #[test]
    fn forbidden_edge_gives_isolated_vertices() {
        let (g, _) = build_approximant(&cfg(complete(2), 2, 2, 3)).unwrap();
        assert_eq!(g.size(), 0);
        assert!(g.order() > 1);
    }

    #[test]
    fn zero_rounds_and_bad_configs() {
        let (g, trace) = build_approximant(&cfg(complete(3), 0, 2, 4)).unwrap();
        assert_eq!(g, Graph::empty(1));
        assert!(trace.rounds.is_empty());
        let mut bad = cfg(complete(3), 1, 0, 4);
        assert!(build_approximant(&bad).is_err());
        bad.anchor_budget = 1;
        bad.vertex_cap = 0;
        assert!(build_approximant(&bad).is_err());
    }

    #[test]
    fn realized_problems_stay_realized_and_seed_is_inert() {
        let c = cfg(cycle(4).unwrap(), 2, 2, 4);
        let (g, trace) = build_approximant(&c).unwrap();
        for r in trace.realized() {
            let partial: Vec<(usize, usize)> = r.anchor.iter().copied().enumerate().collect();
            assert!(find_embedding(&r.pattern, &g, EmbeddingMode::Induced, &partial).unwrap().is_some());
        }
        let (g2, _) = build_approximant(&BuildConfig { seed: 99, ..c }).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn cap_stops_cleanly() {
        let c = BuildConfig {
            vertex_cap: 6,
            ..cfg(complete(3), 3, 2, 4)
        };
        let (g, trace) = build_approximant(&c).unwrap();
        assert!(g.order() <= 6);
        assert!(trace.rounds.last().unwrap().capped);
    }

    #[test]
    fn anchor_groups() {
        assert_eq!(anchor_group(0, &[], 2), vec![vec![0]]);
        assert_eq!(anchor_group(2, &[0, 5], 2), vec![vec![0, 2], vec![2], vec![2, 5]]);
        assert_eq!(anchor_group(3, &[0, 1, 2], 3).len(), 1 + 3 + 3);
    }

    #[test]
    fn frontier_sweep_processes_new_vertices() {
        let c = BuildConfig {
            sweep: Sweep::Frontier,
            rounds: 1,
            vertex_cap: 120,
            ..cfg(complete(3), 1, 2, 3)
        };
        let (g, trace) = build_approximant(&c).unwrap();
        let done = trace.processed();
        assert!(done.contains(&0) && done.len() < g.order());
        assert!(trace.rounds[0].capped);
    }

    #[test]
    fn p4_free_approximant_has_a_square() {
        let (g, _) = build_approximant(&BuildConfig::new(ConstraintSet::single(crate::standard::path(4)).unwrap())).unwrap();
        assert!(embeds(&cycle(4).unwrap(), &g, EmbeddingMode::Weak));
    }
}
