//! The partial closure for the constraint "two triangles sharing a vertex,
//! with a path of `n` edges hanging from a non-shared corner".

use std::ops::ControlFlow;

use crate::canon::canonical_code;
use crate::closure::free::{Engine, FreeTester};
use crate::closure::{path_basis, triangle_path_patterns, ClosureReport, ClosureStep, ConstraintSet};
use crate::constructions::{bowtie, two_triangles_path};
use crate::embed::{find_embedding, for_each_embedding, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Path-basis closure (paths of at most `n` edges) extended by the two
/// triangle clauses:
///
/// 1. for `a` in `x` that is a non-central vertex of some bow-tie, all of
///    `cl({a}; H)` for occurrences `H` of a triangle with a path of at most
///    `n` edges containing `a`;
/// 2. for any `a` in `x` and such an occurrence containing `a`, the points
///    `b` of `cl({a}; H)` that share a triangle with `a`, or that lie on a
///    bow-tie with a path hanging from a non-central vertex, other than as the
///    center.
///
/// With `iterate` the operator is repeated to a fixed point within
/// `|V(g)|` passes.
pub fn cl_star(g: &Graph, x: &VertexSet, n: usize, iterate: bool) -> Result<ClosureReport> {
    for &v in x {
        g.check_vertex(v)?;
    }
    let cs = ConstraintSet::single(two_triangles_path(n))?;
    if cs.first_violation(g).is_some() {
        return Err(Error::ConstraintViolated(0));
    }
    let copies = cs.k();
    let paths = path_basis(n)?;
    let mut engine = Engine::new(g, &cs, copies, &paths)?;
    let tester = FreeTester::new(g, &cs, copies);
    let patterns = triangle_path_patterns(n)?;
    let codes = patterns
        .pairs
        .iter()
        .map(|p| canonical_code(&p.pattern))
        .collect::<Result<Vec<_>>>()?;
    let bt = bowtie();
    let tail_points = bowtie_tail_points(g, &bt);

    let mut current = x.clone();
    let mut steps = Vec::new();
    let budget = g.order().max(1);
    let mut passes = 0;
    let mut fixed_point = false;
    loop {
        let (mut acc, mut pass_steps) = engine.pass(&current);
        for &a in &current {
            let clause1 = find_embedding(&bt, g, EmbeddingMode::Weak, &[(1, a)])?.is_some();
            for (pi, pair) in patterns.pairs.iter().enumerate() {
                let mut occs = Vec::new();
                for_each_embedding(&pair.pattern, g, EmbeddingMode::Weak, &[(pair.anchor[0], a)], |m| {
                    occs.push(m.to_vec());
                    ControlFlow::Continue(())
                })?;
                occs.sort();
                for occ in occs {
                    let anchor: VertexSet = [a].into_iter().collect();
                    let cl = tester.cl_pair(&anchor, &pair.pattern, &occ);
                    let added: Vec<usize> = cl
                        .iter()
                        .copied()
                        .filter(|b| !acc.contains(b))
                        .filter(|&b| clause1 || share_triangle(g, a, b) || tail_points.contains(&b))
                        .collect();
                    if !added.is_empty() {
                        acc.extend(added.iter().copied());
                        pass_steps.push(ClosureStep {
                            pattern: codes[pi].clone(),
                            anchor: vec![a],
                            added,
                        });
                    }
                }
            }
        }
        passes += 1;
        steps.append(&mut pass_steps);
        let grew = acc.len() > current.len();
        current = acc;
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

fn share_triangle(g: &Graph, a: usize, b: usize) -> bool {
    a != b && g.has_edge(a, b) && g.neighbors(a).iter().any(|&w| w != b && g.has_edge(w, b))
}

/// Vertices lying on a bow-tie with a (possibly empty) path attached at a
/// non-central vertex, other than as the center: everything reachable from
/// a non-central bow-tie vertex without passing through the rest of that
/// bow-tie.
fn bowtie_tail_points(g: &Graph, bt: &Graph) -> VertexSet {
    let mut out = VertexSet::new();
    let _ = for_each_embedding(bt, g, EmbeddingMode::Weak, &[], |m| {
        let y = m[1];
        let blocked: VertexSet = m.iter().copied().filter(|&v| v != y).collect();
        out.extend(g.reachable_avoiding(y, &blocked));
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::cycle;

    #[test]
    fn triangle_free_host_matches_path_closure() {
        let g = cycle(6).unwrap();
        let x: VertexSet = [0].into_iter().collect();
        let star = cl_star(&g, &x, 2, true).unwrap();
        let cs = ConstraintSet::single(two_triangles_path(2)).unwrap();
        let plain = crate::closure::cl_family(&g, &x, &path_basis(2).unwrap(), &cs, true, cs.k()).unwrap();
        assert_eq!(star.final_set, plain.final_set);
    }

    #[test]
    fn fixed_point_input() {
        let g = cycle(5).unwrap();
        let x: VertexSet = g.vertices().collect();
        assert!(cl_star(&g, &x, 1, false).unwrap().fixed_point);
        assert!(cl_star(&two_triangles_path(1), &x, 1, false).is_err());
    }
}
