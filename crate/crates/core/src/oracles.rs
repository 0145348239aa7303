//! Named verification oracles. Each run checks one structural law on a
//! batch of instances and reports pass/fail with the first counterexample.
//!
//! Oracles on approximants build them with [`BuildConfig::new`] defaults
//! unless noted, so every outcome is a deterministic function of the name
//! and parameters.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;
use serde_json::{json, Value};

use crate::builder::{build_approximant, ApproximantTrace, BuildConfig, Sweep};
use crate::canon::{canonical_code, CanonicalCode};
use crate::cases::{
    a_star, chain_cover, claims_within, clique_intersection_audit, erdos_gallai_audit, free_sequence_audit, settled,
    Knk3Analysis,
};
use crate::closure::{
    cl_family, cl_levels, homclosure_verdict, omits, path_basis, quantifier_bound, AclSearch, ConstraintSet,
    VerdictStatus,
};
use crate::constructions::{bouquet_star, bowtie, complete_triangle, mycielski_sub, two_triangles_path};
use crate::embed::{find_embedding, for_each_embedding, EmbeddingMode};
use crate::enumerate::{connected_graphs_up_to, for_each_graph_of_order_unsorted, graphs_up_to};
use crate::error::{Error, Result};
use crate::graph::{join, Graph, VertexSet};
use crate::hom::{hom_images, minimal_hom_images};
use crate::standard::{complete, cycle, path};
use crate::structure::chromatic_number;

/// Oracle names accepted by [`run_oracle`], in `verify --all` order.
pub const ORACLES: &[&str] = &[
    "lemma7",
    "prop2",
    "lemma8",
    "example12",
    "theorem4",
    "prop1-bowtie",
    "lemma12",
    "lemma13",
    "erdos-gallai",
    "ck1-lower",
    "product-law",
    "quantifier-bound",
    "unique-clique",
    "lemma9",
    "lemma10",
    "lemma11",
];

#[derive(Debug, Clone, Serialize)]
pub struct OracleOutcome {
    pub name: &'static str,
    pub params: Vec<usize>,
    pub pass: bool,
    /// Instances (graphs, sets, pairs) examined.
    pub checked: usize,
    pub details: Value,
    pub counterexample: Option<Value>,
}

impl OracleOutcome {
    fn new(name: &'static str, params: &[usize]) -> OracleOutcome {
        OracleOutcome {
            name,
            params: params.to_vec(),
            pass: true,
            checked: 0,
            details: Value::Null,
            counterexample: None,
        }
    }

    /// Records a failure, keeping the first counterexample.
    fn fail(&mut self, counterexample: Value) {
        self.pass = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(counterexample);
        }
    }
}

/// Parameter tuples run when none are given.
pub fn default_params(name: &str) -> Result<Vec<Vec<usize>>> {
    Ok(match name {
        "lemma7" => vec![vec![1], vec![2], vec![3], vec![4]],
        "prop2" | "lemma8" => vec![vec![1, 2, 1], vec![2, 2, 1], vec![1, 3, 2]],
        "example12" | "quantifier-bound" => vec![vec![]],
        "theorem4" => vec![vec![2], vec![3]],
        "prop1-bowtie" => vec![vec![3000]],
        "lemma12" | "lemma13" => vec![vec![4]],
        "erdos-gallai" | "unique-clique" => vec![vec![7]],
        "ck1-lower" | "lemma10" | "lemma11" => vec![vec![4]],
        "product-law" => vec![vec![4]],
        "lemma9" => vec![vec![9, 1]],
        _ => return Err(unknown(name)),
    })
}

fn unknown(name: &str) -> Error {
    Error::InvalidParameter(format!("unknown oracle `{name}`; known: {}", ORACLES.join(", ")))
}

fn arity(name: &str, params: &[usize], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::InvalidParameter(format!(
            "oracle `{name}` takes {want} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Runs one oracle on one parameter tuple.
pub fn run_oracle(name: &str, params: &[usize]) -> Result<OracleOutcome> {
    let name: &'static str = ORACLES.iter().copied().find(|n| *n == name).ok_or_else(|| unknown(name))?;
    let want = match name {
        "example12" | "quantifier-bound" => 0,
        "prop2" | "lemma8" => 3,
        "lemma9" => 2,
        _ => 1,
    };
    arity(name, params, want)?;
    let p = params;
    match name {
        "lemma7" => mycielski_images(name, p[0]),
        "prop2" => bouquet_images(name, p),
        "lemma8" => bouquet_chromatic(name, p),
        "example12" => bouquet_is_pentagon(name),
        "theorem4" => odd_cycles_trivial(name, p[0]),
        "prop1-bowtie" => bowtie_claims(name, p[0]),
        "lemma12" => clique_intersections(name, p[0]),
        "lemma13" => star_criterion(name, p[0]),
        "erdos-gallai" => erdos_gallai(name, p[0]),
        "ck1-lower" => cycle_closure(name, p[0]),
        "product-law" => product_law(name, p[0]),
        "quantifier-bound" => quantifier_table(name),
        "unique-clique" => unique_clique(name, p[0]),
        "lemma9" => long_paths_search(name, p[0], p[1]),
        "lemma10" => free_sequences(name, p[0]),
        "lemma11" => chain_covers(name, p[0]),
        _ => Err(unknown(name)),
    }
}

fn graph_json(g: &Graph) -> Value {
    json!({ "order": g.order(), "edges": g.edge_vec() })
}

fn code_set<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Result<BTreeSet<CanonicalCode>> {
    graphs.into_iter().map(canonical_code).collect()
}

fn hex_list(codes: &BTreeSet<CanonicalCode>) -> Vec<String> {
    codes.iter().map(CanonicalCode::to_hex).collect()
}

fn trace_json(g: &Graph, trace: &ApproximantTrace) -> Value {
    json!({
        "order": g.order(),
        "size": g.size(),
        "code": canonical_code_hex(g),
        "rounds": trace.rounds.len(),
        "capped": trace.rounds.last().is_some_and(|r| r.capped),
        "processed": trace.processed().len(),
    })
}

/// Canonical codes are only defined up to the canon cap; larger hosts get
/// `null`.
fn canonical_code_hex(g: &Graph) -> Value {
    match canonical_code(g) {
        Ok(c) => json!(c.to_hex()),
        Err(_) => Value::Null,
    }
}

fn mycielski_images(name: &'static str, n: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[n]);
    let m = mycielski_sub(n);
    let chi = chromatic_number(&m);
    out.checked += 1;
    if chi != n + 1 {
        out.fail(json!({ "chromatic_number": chi, "expected": n + 1 }));
    }
    let mut details = json!({ "order": m.order(), "chromatic_number": chi });
    if n >= 2 {
        let got = code_set(minimal_hom_images(&m)?.images.iter().map(|i| &i.graph))?;
        let expected_graphs: Vec<Graph> = (0..=n)
            .filter(|&k| k + 1 != n)
            .map(|k| join(&complete(k), &mycielski_sub(n - k)))
            .collect();
        let expected = code_set(&expected_graphs)?;
        out.checked += 1;
        if got != expected || got.len() != n {
            out.fail(json!({ "minimal_images": hex_list(&got), "expected": hex_list(&expected) }));
        }
        details["minimal_images"] = json!(got.len());
    }
    out.details = details;
    Ok(out)
}

fn bouquet_images(name: &'static str, p: &[usize]) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, p);
    let g = bouquet_star(p[0], p[1], p[2])?;
    let got = code_set(minimal_hom_images(&g)?.images.iter().map(|i| &i.graph))?;
    let expected = code_set([&g, &complete(p[1] + 1)])?;
    out.checked = 1;
    if got != expected {
        out.fail(json!({ "minimal_images": hex_list(&got), "expected": hex_list(&expected) }));
    }
    out.details = json!({ "order": g.order(), "minimal_images": got.len() });
    Ok(out)
}

fn bouquet_chromatic(name: &'static str, p: &[usize]) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, p);
    let g = bouquet_star(p[0], p[1], p[2])?;
    let chi = chromatic_number(&g);
    out.checked = 1;
    if chi != p[1] + 1 {
        out.fail(json!({ "chromatic_number": chi, "expected": p[1] + 1 }));
    }
    out.details = json!({ "order": g.order(), "chromatic_number": chi });
    Ok(out)
}

fn bouquet_is_pentagon(name: &'static str) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[]);
    let a = canonical_code(&bouquet_star(1, 2, 1)?)?;
    let b = canonical_code(&cycle(5)?)?;
    out.checked = 1;
    if a != b {
        out.fail(json!({ "bouquet_star": a.to_hex(), "cycle": b.to_hex() }));
    }
    out.details = json!({ "code": a.to_hex() });
    Ok(out)
}

fn odd_cycles(k: usize) -> Result<ConstraintSet> {
    if k == 0 {
        return Err(Error::InvalidParameter("odd cycle family needs k >= 1".into()));
    }
    ConstraintSet::new((1..=k).map(|i| cycle(2 * i + 1)).collect::<Result<Vec<_>>>()?)
}

fn odd_cycles_trivial(name: &'static str, k: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[k]);
    let cs = odd_cycles(k)?;
    let verdict = homclosure_verdict(&cs, None)?;
    out.checked += 1;
    if verdict.status != VerdictStatus::UniversalExistsAclTrivial {
        out.fail(json!({ "verdict": verdict }));
    }
    let (g, trace) = build_approximant(&BuildConfig::new(cs.clone()))?;
    let mut search = AclSearch::new(&g, &cs)?;
    for u in g.vertices() {
        for v in u..g.order() {
            let a: VertexSet = [u, v].into_iter().collect();
            out.checked += 1;
            if let Some(w) = search.witness(&a)? {
                out.fail(json!({ "set": a, "witness": w }));
            }
        }
    }
    out.details = json!({ "verdict": verdict.status, "rule": verdict.rule, "approximant": trace_json(&g, &trace) });
    Ok(out)
}

/// Claims (2) and (3) and the singleton `A*` bound on the whole
/// approximant; claim (1), the pair bound and algebraic closedness of `A*`
/// for sets inside the settled region.
fn bowtie_claims(name: &'static str, cap: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[cap]);
    let cs = ConstraintSet::single(bowtie())?;
    let cfg = BuildConfig {
        sweep: Sweep::Frontier,
        rounds: 1,
        vertex_cap: cap,
        ..BuildConfig::new(cs.clone())
    };
    let (g, trace) = build_approximant(&cfg)?;
    let region = settled(&g, &trace.processed());
    let global = claims_within(&g, None);
    let local = claims_within(&g, Some(&region));
    out.checked += 3;
    for (claim, c) in [(2, &global[1]), (3, &global[2]), (1, &local[0])] {
        if !c.holds {
            out.fail(json!({ "claim": claim, "counterexample": c.counterexample }));
        }
    }
    if region.is_empty() {
        out.fail(json!({ "settled_region": "empty" }));
    }
    for v in g.vertices() {
        let a: VertexSet = [v].into_iter().collect();
        let star = a_star(&g, &a);
        out.checked += 1;
        if star.len() > 4 {
            out.fail(json!({ "set": a, "a_star": star }));
        }
    }
    let mut search = AclSearch::new(&g, &cs)?;
    let inside: Vec<usize> = region.iter().copied().collect();
    let mut stable = 0;
    let mut grown = 0;
    for (i, &u) in inside.iter().enumerate() {
        for &v in &inside[i..] {
            let a: VertexSet = [u, v].into_iter().collect();
            let star = a_star(&g, &a);
            out.checked += 1;
            if star.len() > 4 * a.len() {
                out.fail(json!({ "set": a, "a_star": star }));
            }
            if star.len() > a.len() {
                grown += 1;
            }
            if a_star(&g, &star) == star {
                stable += 1;
            }
            if let Some(w) = search.witness(&star)? {
                out.fail(json!({ "set": a, "a_star": star, "witness": w }));
            }
        }
    }
    out.details = json!({
        "approximant": trace_json(&g, &trace),
        "settled": region,
        "claim1_global": global[0].holds,
        "claim1_global_counterexample": global[0].counterexample,
        "sets_with_larger_star": grown,
        "star_stable_sets": stable,
    });
    Ok(out)
}

/// Extension budget 5 and a frontier sweep to cap 1000: the default budget
/// realizes a single `K_n` and leaves the clique law vacuous.
fn knk3_approximant(n: usize) -> Result<(ConstraintSet, Graph, ApproximantTrace)> {
    let cs = ConstraintSet::single(complete_triangle(n)?)?;
    let cfg = BuildConfig {
        extension_budget: 5,
        sweep: Sweep::Frontier,
        rounds: 1,
        vertex_cap: 1000,
        ..BuildConfig::new(cs.clone())
    };
    let (g, trace) = build_approximant(&cfg)?;
    Ok((cs, g, trace))
}

fn clique_intersections(name: &'static str, n: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[n]);
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    let (_, g, trace) = knk3_approximant(n)?;
    let audit = clique_intersection_audit(&g, n);
    out.checked = audit.pairs_checked;
    if !audit.holds {
        out.fail(json!(audit.counterexample));
    }
    out.details = json!({ "approximant": trace_json(&g, &trace), "cliques": audit.cliques });
    Ok(out)
}

/// A singleton is closed under `a*` exactly when no free-amalgam witness
/// exists, and the iterated closure stays within `(n+1)|A|`.
fn star_criterion(name: &'static str, n: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[n]);
    let (cs, g, trace) = knk3_approximant(n)?;
    let mut analysis = Knk3Analysis::new(&g, n)?;
    let mut search = AclSearch::new(&g, &cs)?;
    let mut closed = 0;
    for v in g.vertices() {
        let a: VertexSet = [v].into_iter().collect();
        let report = analysis.report(&a)?;
        let witness = search.witness(&a)?;
        out.checked += 1;
        closed += usize::from(report.closed);
        if report.closed != witness.is_none() {
            out.fail(json!({ "vertex": v, "closed": report.closed, "witness": witness }));
        }
        if !report.bound_ok {
            out.fail(json!({ "set": a, "closure": report.closure }));
        }
    }
    for u in g.vertices() {
        for v in u + 1..g.order() {
            let a: VertexSet = [u, v].into_iter().collect();
            let report = analysis.report(&a)?;
            out.checked += 1;
            if !report.bound_ok {
                out.fail(json!({ "set": a, "closure": report.closure }));
            }
        }
    }
    out.details = json!({ "approximant": trace_json(&g, &trace), "closed_singletons": closed });
    Ok(out)
}

fn erdos_gallai(name: &'static str, max: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[max]);
    let mut tight = 0;
    for g in graphs_up_to(max)? {
        let audit = erdos_gallai_audit(&g);
        out.checked += 1;
        tight += usize::from(2 * audit.edges == audit.twice_bound && audit.edges > 0);
        if !audit.holds {
            out.fail(json!({ "graph": graph_json(&g), "audit": audit }));
        }
    }
    out.details = json!({ "tight": tight });
    Ok(out)
}

/// Every vertex of a `k`-cycle in a `P_k`-free approximant has all cycle
/// vertices in its iterated path closure; for `k = 4` the levels follow the
/// worked pattern (both cycle neighbors at level 1, the opposite vertex by
/// level 2). Also checks `|cl_1(v)| < k^{3k}` and `|cl(v)| < k^{3k²}` on
/// the processed vertices.
fn cycle_closure(name: &'static str, k: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[k]);
    if k < 3 {
        return Err(Error::InvalidParameter("cycle length must be at least 3".into()));
    }
    let cs = ConstraintSet::single(path(k))?;
    let (g, trace) = build_approximant(&BuildConfig::new(cs.clone()))?;
    let fam = path_basis(k - 1)?;
    let c = cycle(k)?;
    let mut cycles: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut first: Option<Vec<usize>> = None;
    for_each_embedding(&c, &g, EmbeddingMode::Weak, &[], |m| {
        if first.is_none() {
            first = Some(m.to_vec());
        }
        let mut s = m.to_vec();
        s.sort_unstable();
        cycles.insert(s);
        ControlFlow::Continue(())
    })?;
    if cycles.is_empty() {
        out.fail(json!({ "cycle": "none in approximant" }));
    }
    for s in &cycles {
        for &v in s {
            let x: VertexSet = [v].into_iter().collect();
            let report = cl_family(&g, &x, &fam, &cs, true, cs.k())?;
            out.checked += 1;
            let fin = report.final_vertices();
            if !s.iter().all(|w| fin.contains(w)) {
                out.fail(json!({ "cycle": s, "vertex": v, "closure": report.final_set }));
            }
        }
    }
    let mut worked = Value::Null;
    if let (4, Some(occ)) = (k, first.as_ref()) {
        let (v, a, b, c) = (occ[0], occ[1], occ[2], occ[3]);
        let levels = cl_levels(&g, v, &fam, &cs, cs.k(), k + 1)?;
        let level_of = |w: usize| levels.iter().position(|l| l.contains(&w));
        out.checked += 1;
        let ok = level_of(a) == Some(1) && level_of(c) == Some(1) && level_of(b).is_some_and(|i| i <= 2);
        if !ok {
            out.fail(json!({ "cycle": occ, "levels": levels }));
        }
        worked = json!({ "cycle": occ, "levels": levels });
    }
    let one = (k as u128).pow(3 * k as u32);
    let all = (k as u128).checked_pow(3 * (k * k) as u32);
    let mut largest = (0usize, 0usize);
    for v in trace.processed() {
        let levels = cl_levels(&g, v, &fam, &cs, cs.k(), g.order())?;
        let first_level = levels.get(1).map_or(0, Vec::len);
        let total: usize = levels.iter().map(Vec::len).sum();
        largest = (largest.0.max(first_level), largest.1.max(total));
        out.checked += 1;
        if first_level as u128 >= one || all.is_some_and(|b| total as u128 >= b) {
            out.fail(json!({ "vertex": v, "level1": first_level, "closure": total }));
        }
    }
    out.details = json!({
        "approximant": trace_json(&g, &trace),
        "cycles": cycles.len(),
        "worked_example": worked,
        "largest_level1": largest.0,
        "largest_closure": largest.1,
    });
    Ok(out)
}

fn product_law(name: &'static str, max: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[max]);
    let graphs = connected_graphs_up_to(max)?;
    let images: Vec<Vec<Graph>> = graphs
        .iter()
        .map(|g| Ok(hom_images(g)?.images.into_iter().map(|i| i.graph).collect()))
        .collect::<Result<_>>()?;
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            let got = code_set(hom_images(&join(&graphs[i], &graphs[j]))?.images.iter().map(|x| &x.graph))?;
            let mut expected = BTreeSet::new();
            for x in &images[i] {
                for y in &images[j] {
                    expected.insert(canonical_code(&join(x, y))?);
                }
            }
            out.checked += 1;
            if got != expected {
                out.fail(json!({
                    "a": graph_json(&graphs[i]),
                    "b": graph_json(&graphs[j]),
                    "images": hex_list(&got),
                    "products": hex_list(&expected),
                }));
            }
        }
    }
    out.details = json!({ "graphs": graphs.len() });
    Ok(out)
}

fn quantifier_table(name: &'static str) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[]);
    let mut rows = Vec::new();
    for k in [2u64, 3, 5] {
        for n in 0..=3u32 {
            let expanded: u64 = (0..=n).map(|i| k.pow(2 * i + 1)).sum();
            let got = quantifier_bound(k, n)?;
            out.checked += 1;
            if got != expanded {
                out.fail(json!({ "k": k, "n": n, "bound": got, "expanded": expanded }));
            }
            rows.push(json!([k, n, got]));
        }
    }
    out.details = json!({ "table": rows });
    Ok(out)
}

fn unique_clique(name: &'static str, max: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[max]);
    for g in connected_graphs_up_to(max)? {
        let chi = chromatic_number(&g);
        let complete_members: Vec<usize> = minimal_hom_images(&g)?
            .images
            .iter()
            .filter(|i| i.graph.is_complete())
            .map(|i| i.graph.order())
            .collect();
        out.checked += 1;
        if complete_members != [chi] {
            out.fail(json!({ "graph": graph_json(&g), "chromatic_number": chi, "complete_members": complete_members }));
        }
    }
    Ok(out)
}

/// Two paths of `len` edges from `u` sharing only `u`.
fn two_disjoint_paths(g: &Graph, u: usize, len: usize) -> bool {
    let mut used = vec![false; g.order()];
    used[u] = true;
    let mut search = PathPair {
        g,
        u,
        len,
        used,
        free: g.order() - 1,
    };
    search.extend(u, len, 1)
}

/// Depth-first search for the second path after the first, pruned by the
/// number of unused vertices.
struct PathPair<'a> {
    g: &'a Graph,
    u: usize,
    len: usize,
    used: Vec<bool>,
    free: usize,
}

impl PathPair<'_> {
    fn extend(&mut self, at: usize, left: usize, more: usize) -> bool {
        if left == 0 {
            return more == 0 || self.extend(self.u, self.len, more - 1);
        }
        if self.free < left + more * self.len {
            return false;
        }
        for &w in self.g.neighbors(at) {
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            self.free -= 1;
            let found = self.extend(w, left - 1, more);
            self.used[w] = false;
            self.free += 1;
            if found {
                return true;
            }
        }
        false
    }
}

/// Graphs up to `max_order` vertices omitting `T1 + T2 + P_n` with a vertex
/// `u` that ends a copy of `T1 + T2 + P_j` (`j ≤ n`) and starts two paths of
/// `5n` edges sharing only `u`. Any such graph refutes the implication.
fn long_paths_search(name: &'static str, max_order: usize, n: usize) -> Result<OracleOutcome> {
    let p = [max_order, n];
    let mut out = OracleOutcome::new(name, &p);
    if n == 0 {
        return Err(Error::InvalidParameter("path length n must be positive".into()));
    }
    let c = two_triangles_path(n);
    let cs = ConstraintSet::single(c)?;
    let parts: Vec<(Graph, usize)> = (0..n).map(|j| (two_triangles_path(j), 4 + j)).collect();
    let mut hosts = 0usize;
    let mut error = None;
    for order in 1..=max_order {
        for_each_graph_of_order_unsorted(order, |g| {
            out.checked += 1;
            if !omits(g, &cs) {
                return;
            }
            hosts += 1;
            for u in g.vertices() {
                let begins = parts.iter().any(|(h, end)| {
                    matches!(find_embedding(h, g, EmbeddingMode::Weak, &[(*end, u)]), Ok(Some(_)))
                });
                if begins && two_disjoint_paths(g, u, 5 * n) {
                    out.fail(json!({ "graph": graph_json(g), "vertex": u }));
                }
            }
        })
        .unwrap_or_else(|e| error = Some(e));
        if let Some(e) = error.take() {
            return Err(e);
        }
    }
    out.details = json!({ "hosts_omitting": hosts, "counterexamples": usize::from(!out.pass) });
    Ok(out)
}

fn path_approximant(k: usize) -> Result<(ConstraintSet, Graph, ApproximantTrace)> {
    if k < 2 {
        return Err(Error::InvalidParameter("path bound must be at least 2".into()));
    }
    let cs = ConstraintSet::single(path(k))?;
    let (g, trace) = build_approximant(&BuildConfig::new(cs.clone()))?;
    Ok((cs, g, trace))
}

/// Free-making sequences along paths from processed vertices satisfy the
/// chain inequalities, with threshold `|P_k|`.
fn free_sequences(name: &'static str, k: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[k]);
    let (cs, g, trace) = path_approximant(k)?;
    let mut failures = 0;
    for v in trace.processed() {
        let audit = free_sequence_audit(&g, v, k, cs.k())?;
        out.checked += audit.sequences;
        if !audit.holds {
            failures += 1;
            out.fail(json!(audit.counterexample));
        }
    }
    out.details = json!({ "approximant": trace_json(&g, &trace), "threshold": cs.k(), "failing_vertices": failures });
    Ok(out)
}

/// Chain covers of `cl_1(v)` for processed `v` meet the size bound and cover
/// every chain leaving the set.
fn chain_covers(name: &'static str, k: usize) -> Result<OracleOutcome> {
    let mut out = OracleOutcome::new(name, &[k]);
    let (cs, g, trace) = path_approximant(k)?;
    let fam = path_basis(k - 1)?;
    let mut largest = 0;
    for v in trace.processed() {
        let levels = cl_levels(&g, v, &fam, &cs, cs.k(), 2)?;
        let a: VertexSet = levels.get(1).into_iter().flatten().copied().collect();
        let report = chain_cover(&g, v, &a, k, cs.k())?;
        out.checked += 1;
        largest = largest.max(report.added);
        if !report.bound_ok || !report.covering_ok {
            out.fail(json!(report));
        }
    }
    out.details = json!({ "approximant": trace_json(&g, &trace), "threshold": cs.k(), "largest_added": largest });
    Ok(out)
}
