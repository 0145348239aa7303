use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::canon::canonical_code;
use crate::closure::{omits, AnchoredPattern, ClosureReport, ClosureStep, ConstraintSet, PairFamily};
use crate::embed::{for_each_embedding, EmbeddingMode};
use crate::error::Result;
use crate::graph::{check_anchor_embedding, free_amalgam, Graph, VertexSet};

/// Free amalgam of `copies` copies of `pat` over `anchor_image` omits `cs`.
pub fn is_free(
    g: &Graph,
    pat: &AnchoredPattern,
    anchor_image: &[usize],
    cs: &ConstraintSet,
    copies: usize,
) -> Result<bool> {
    check_anchor_embedding(g, &pat.pattern, &pat.anchor, anchor_image)?;
    let tester = FreeTester::new(g, cs, copies);
    Ok(tester.free(&pat.pattern, &pat.anchor, anchor_image))
}

/// Freeness tests against one host; the host is checked once.
pub struct FreeTester<'a> {
    pub g: &'a Graph,
    pub cs: &'a ConstraintSet,
    pub copies: usize,
    host_omits: bool,
}

impl<'a> FreeTester<'a> {
    pub fn new(g: &'a Graph, cs: &'a ConstraintSet, copies: usize) -> FreeTester<'a> {
        FreeTester {
            g,
            cs,
            copies,
            host_omits: omits(g, cs),
        }
    }

    pub fn host_omits(&self) -> bool {
        self.host_omits
    }

    /// The anchor map must already be a valid weak embedding.
    pub fn free(&self, pattern: &Graph, pattern_anchor: &[usize], anchor_image: &[usize]) -> bool {
        if !self.host_omits {
            return false;
        }
        if pattern_anchor.len() == pattern.order() || self.copies == 0 {
            return true;
        }
        let amalgam = free_amalgam(self.g, pattern, pattern_anchor, anchor_image, self.copies)
            .expect("anchor embedding validated by caller");
        let fresh: Vec<usize> = (self.g.order()..amalgam.order()).collect();
        !self.cs.violated_touching(&amalgam, &fresh)
    }

    /// `A` together with every `B` inside the occurrence, disjoint from
    /// `A`, minimal under inclusion such that the occurrence is free over
    /// `A ∪ B`. `occ[p]` is the host image of pattern vertex `p`.
    pub fn cl_pair(&self, a: &VertexSet, pattern: &Graph, occ: &[usize]) -> VertexSet {
        let mut out = a.clone();
        for b in self.minimal_sets(a, pattern, occ) {
            out.extend(b);
        }
        out
    }

    /// The minimal free-making sets themselves, in subset-mask order.
    /// `[∅]` when the occurrence is already free over `A`; empty when no
    /// set works.
    pub fn minimal_sets(&self, a: &VertexSet, pattern: &Graph, occ: &[usize]) -> Vec<VertexSet> {
        let rest: Vec<usize> = pattern.vertices().filter(|&p| !a.contains(&occ[p])).collect();
        let inside: Vec<usize> = pattern.vertices().filter(|&p| a.contains(&occ[p])).collect();
        let r = rest.len();
        let mut free = vec![false; 1 << r];
        for (mask, slot) in free.iter_mut().enumerate() {
            let mut anchor = inside.clone();
            anchor.extend((0..r).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]));
            let image: Vec<usize> = anchor.iter().map(|&p| occ[p]).collect();
            *slot = self.free(pattern, &anchor, &image);
            if mask == 0 && *slot {
                return vec![VertexSet::new()];
            }
        }
        let mut out = Vec::new();
        for mask in 1..free.len() {
            if !free[mask] {
                continue;
            }
            let mut sub = (mask - 1) & mask;
            let mut minimal = true;
            while minimal && sub != 0 {
                if free[sub] {
                    minimal = false;
                }
                sub = (sub - 1) & mask;
            }
            if minimal {
                out.push((0..r).filter(|&i| mask >> i & 1 == 1).map(|i| occ[rest[i]]).collect());
            }
        }
        out
    }
}

/// `cl(A; H)` for one weak occurrence `occ` of `pattern` in `g`.
pub fn cl_pair(
    g: &Graph,
    a: &VertexSet,
    pattern: &Graph,
    occ: &[usize],
    cs: &ConstraintSet,
    copies: usize,
) -> Result<VertexSet> {
    let all: Vec<usize> = pattern.vertices().collect();
    check_anchor_embedding(g, pattern, &all, occ)?;
    if let Some(&v) = a.iter().find(|v| !occ.contains(v)) {
        return Err(crate::error::Error::InvalidEmbedding(format!(
            "anchor vertex {v} is not covered by the occurrence"
        )));
    }
    Ok(FreeTester::new(g, cs, copies).cl_pair(a, pattern, occ))
}

/// One pass of `cl(X; F)`, or repeated passes to a fixed point within a
/// budget of `|V(g)|` passes.
pub fn cl_family(
    g: &Graph,
    x: &VertexSet,
    fam: &PairFamily,
    cs: &ConstraintSet,
    iterate: bool,
    copies: usize,
) -> Result<ClosureReport> {
    let mut engine = Engine::new(g, cs, copies, fam)?;
    engine.run(x, iterate, g.order().max(1))
}

/// Successive levels: `L_0 = {v}` and `L_{i+1} = cl(U_i; F) - U_i` with
/// `U_i` the union of the earlier levels. Stops at `max_levels` levels or
/// when a level comes out empty (the empty level is not reported).
pub fn cl_levels(
    g: &Graph,
    v: usize,
    fam: &PairFamily,
    cs: &ConstraintSet,
    copies: usize,
    max_levels: usize,
) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(v)?;
    let mut engine = Engine::new(g, cs, copies, fam)?;
    let mut levels = vec![vec![v]];
    let mut union: VertexSet = [v].into_iter().collect();
    while levels.len() < max_levels {
        let (next, _) = engine.pass(&union);
        let new: Vec<usize> = next.difference(&union).copied().collect();
        if new.is_empty() {
            break;
        }
        union.extend(new.iter().copied());
        levels.push(new);
    }
    Ok(levels)
}

pub(crate) struct Engine<'a> {
    tester: FreeTester<'a>,
    pairs: Vec<(&'a AnchoredPattern, crate::canon::CanonicalCode)>,
    cache: HashMap<(usize, Vec<usize>), VertexSet>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(g: &'a Graph, cs: &'a ConstraintSet, copies: usize, fam: &'a PairFamily) -> Result<Engine<'a>> {
        let pairs = fam
            .pairs
            .iter()
            .map(|p| Ok((p, canonical_code(&p.pattern)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Engine {
            tester: FreeTester::new(g, cs, copies),
            pairs,
            cache: HashMap::new(),
        })
    }

    pub(crate) fn run(&mut self, x: &VertexSet, iterate: bool, budget: usize) -> Result<ClosureReport> {
        for &v in x {
            self.tester.g.check_vertex(v)?;
        }
        let mut current = x.clone();
        let mut steps = Vec::new();
        let mut passes = 0;
        let mut fixed_point = false;
        loop {
            let (next, mut pass_steps) = self.pass(&current);
            passes += 1;
            steps.append(&mut pass_steps);
            let grew = next.len() > current.len();
            current = next;
            if !grew {
                fixed_point = true;
                break;
            }
            if !iterate || passes >= budget {
                break;
            }
        }
        Ok(ClosureReport {
            input: x.iter().copied().collect(),
            final_set: current.into_iter().collect(),
            steps,
            fixed_point,
            budget_exhausted: iterate && !fixed_point,
        })
    }

    /// `x ∪ cl(x; F)` with the steps that grew it.
    pub(crate) fn pass(&mut self, x: &VertexSet) -> (VertexSet, Vec<ClosureStep>) {
        let mut acc = x.clone();
        let mut steps = Vec::new();
        let g = self.tester.g;
        let xs: Vec<usize> = x.iter().copied().collect();
        for idx in 0..self.pairs.len() {
            let (pair, code) = (self.pairs[idx].0, self.pairs[idx].1.clone());
            if pair.anchor.is_empty() {
                // cl(∅; H) is empty: with connected constraints, disjoint
                // copies of a proper part of a constraint never complete one.
                continue;
            }
            let mut occs: Vec<Vec<usize>> = Vec::new();
            for_each_anchor_tuple(&xs, pair.anchor.len(), |tuple| {
                let partial: Vec<(usize, usize)> = pair.anchor.iter().copied().zip(tuple.iter().copied()).collect();
                let _ = for_each_embedding(&pair.pattern, g, EmbeddingMode::Weak, &partial, |m| {
                    occs.push(m.to_vec());
                    ControlFlow::Continue(())
                });
            });
            occs.sort();
            for occ in occs {
                let anchor: VertexSet = pair.anchor.iter().map(|&p| occ[p]).collect();
                let key = (idx, occ);
                let cl = match self.cache.get(&key) {
                    Some(c) => c.clone(),
                    None => {
                        let c = self.tester.cl_pair(&anchor, &pair.pattern, &key.1);
                        self.cache.insert(key.clone(), c.clone());
                        c
                    }
                };
                let added: Vec<usize> = cl.difference(&acc).copied().collect();
                if !added.is_empty() {
                    acc.extend(added.iter().copied());
                    steps.push(ClosureStep {
                        pattern: code.clone(),
                        anchor: anchor.into_iter().collect(),
                        added,
                    });
                }
            }
        }
        (acc, steps)
    }
}

/// Injective tuples of length `len` over `xs`.
fn for_each_anchor_tuple<F: FnMut(&[usize])>(xs: &[usize], len: usize, mut f: F) {
    let mut cur = Vec::with_capacity(len);
    fn rec<F: FnMut(&[usize])>(xs: &[usize], len: usize, cur: &mut Vec<usize>, f: &mut F) {
        if cur.len() == len {
            f(cur);
            return;
        }
        for &x in xs {
            if !cur.contains(&x) {
                cur.push(x);
                rec(xs, len, cur, f);
                cur.pop();
            }
        }
    }
    rec(xs, len, &mut cur, &mut f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{path_basis, proper_subgraph_basis};
    use crate::constructions::bowtie;
    use crate::standard::{complete, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    /// Oracle: free iff the full amalgam omits the constraints.
    fn free_oracle(g: &Graph, pat: &AnchoredPattern, image: &[usize], cs: &ConstraintSet, copies: usize) -> bool {
        let a = free_amalgam(g, &pat.pattern, &pat.anchor, image, copies).unwrap();
        omits(&a, cs)
    }

    #[test]
    fn freeness_examples() {
        let c4 = cycle(4).unwrap();
        let p4 = ConstraintSet::single(path(4)).unwrap();
        // pattern v - a - b on C4 as 0 - 1 - 2
        let at_v = AnchoredPattern::new(path(2), vec![0]).unwrap();
        assert!(!is_free(&c4, &at_v, &[0], &p4, 5).unwrap());
        let at_va = AnchoredPattern::new(path(2), vec![0, 1]).unwrap();
        let r = is_free(&c4, &at_va, &[0, 1], &p4, 5).unwrap();
        assert_eq!(r, free_oracle(&c4, &at_va, &[0, 1], &p4, 5));
        let single = AnchoredPattern::new(Graph::empty(1), vec![0]).unwrap();
        assert!(is_free(&c4, &single, &[2], &p4, 5).unwrap());
        assert!(is_free(&c4, &at_v, &[0, 1], &p4, 5).is_err());
    }

    #[test]
    fn local_test_matches_full_amalgam() {
        let g = cycle(5).unwrap();
        let cs = ConstraintSet::single(path(4)).unwrap();
        for anchor in [vec![0], vec![0, 1], vec![0, 2], vec![1]] {
            let pat = AnchoredPattern::new(path(2), anchor.clone()).unwrap();
            let image: Vec<usize> = anchor.clone();
            if check_anchor_embedding(&g, &pat.pattern, &pat.anchor, &image).is_ok() {
                assert_eq!(
                    is_free(&g, &pat, &image, &cs, 5).unwrap(),
                    free_oracle(&g, &pat, &image, &cs, 5)
                );
            }
        }
    }

    #[test]
    fn triangle_in_bowtie_free_host() {
        let cs = ConstraintSet::single(bowtie()).unwrap();
        let k3 = complete(3);
        let cl = cl_pair(&k3, &set(&[0]), &k3, &[0, 1, 2], &cs, 5).unwrap();
        assert_eq!(cl, set(&[0, 1, 2]));
        let cl2 = cl_pair(&k3, &set(&[0, 1]), &k3, &[0, 1, 2], &cs, 5).unwrap();
        assert_eq!(cl2, set(&[0, 1]));
    }

    #[test]
    fn family_closure_basics() {
        let c4 = cycle(4).unwrap();
        let cs = ConstraintSet::single(path(4)).unwrap();
        let fam = path_basis(3).unwrap();
        let all = set(&[0, 1, 2, 3]);
        let r = cl_family(&c4, &all, &fam, &cs, true, 5).unwrap();
        assert!(r.fixed_point);
        assert_eq!(r.final_vertices(), all);
        let tri_free = cycle(5).unwrap();
        let k3 = ConstraintSet::single(complete(3)).unwrap();
        let fam3 = proper_subgraph_basis(&k3).unwrap();
        let r = cl_family(&tri_free, &set(&[0]), &fam3, &k3, true, 3).unwrap();
        assert_eq!(r.final_set, vec![0]);
    }
}
