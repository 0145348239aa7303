//! Free-amalgam evidence that a vertex set is not algebraically closed.

use std::collections::{BTreeSet, HashMap};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::canon::{canonical_code_colored, CanonicalCode};
use crate::closure::ConstraintSet;
use crate::embed::{embeds, for_each_embedding, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::{free_amalgam, Graph, VertexSet};
use crate::hom::hom_images;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AclWitness {
    /// Index of the constraint `C`.
    pub constraint: usize,
    /// Canonical code of the homomorphic image `C'`.
    pub quotient: CanonicalCode,
    /// Host image of each vertex of `C'`.
    pub occurrence: Vec<usize>,
    /// Vertices of the occurrence lying in the anchor set.
    pub anchor_part: Vec<usize>,
}

/// Searches for a constraint `C`, a homomorphic image `C'` of `C` occurring
/// weakly in `g`, such that `C` embeds weakly in the free amalgam of `|C|`
/// copies of the host-induced graph on the occurrence, glued over its
/// intersection with `a`.
///
/// Occurrences disjoint from `a` or contained in it are skipped: the
/// amalgam is then a disjoint union of copies of a subgraph of `g`, or the
/// subgraph itself, and a connected constraint cannot embed there because
/// `g` omits the constraints. Images containing a constraint are skipped for
/// the same reason. The first witness under (constraint index, quotient
/// code, occurrence) order is returned.
pub fn acl_witness(g: &Graph, a: &VertexSet, cs: &ConstraintSet) -> Result<Option<AclWitness>> {
    AclSearch::new(g, cs)?.witness(a)
}

/// [`acl_witness`] against one host for many anchor sets, sharing the image
/// lists and amalgam tests.
pub struct AclSearch<'a> {
    g: &'a Graph,
    /// Per constraint: the images that can occur in `g`.
    images: Vec<Vec<(CanonicalCode, Graph)>>,
    cs: &'a ConstraintSet,
    cache: HashMap<(usize, CanonicalCode), bool>,
}

impl<'a> AclSearch<'a> {
    pub fn new(g: &'a Graph, cs: &'a ConstraintSet) -> Result<AclSearch<'a>> {
        if let Some(i) = cs.first_violation(g) {
            return Err(Error::ConstraintViolated(i));
        }
        let mut images = Vec::new();
        for c in cs.members() {
            images.push(
                hom_images(c)?
                    .images
                    .into_iter()
                    .filter(|img| !contains_member(&img.graph, cs))
                    .map(|img| (img.code, img.graph))
                    .collect(),
            );
        }
        Ok(AclSearch {
            g,
            images,
            cs,
            cache: HashMap::new(),
        })
    }

    pub fn witness(&mut self, a: &VertexSet) -> Result<Option<AclWitness>> {
        let g = self.g;
        for &v in a {
            g.check_vertex(v)?;
        }
        for (ci, c) in self.cs.members().iter().enumerate() {
            for (code, q) in &self.images[ci] {
                let mut occs: BTreeSet<Vec<usize>> = BTreeSet::new();
                for &x in a {
                    for p in q.vertices() {
                        if q.degree(p) > g.degree(x) {
                            continue;
                        }
                        let _ = for_each_embedding(q, g, EmbeddingMode::Weak, &[(p, x)], |m| {
                            occs.insert(m.to_vec());
                            ControlFlow::Continue(())
                        });
                    }
                }
                for occ in occs {
                    let mut verts: Vec<usize> = occ.clone();
                    verts.sort_unstable();
                    let inside: Vec<usize> = verts.iter().copied().filter(|v| a.contains(v)).collect();
                    if inside.is_empty() || inside.len() == verts.len() {
                        continue;
                    }
                    let local = g.induced_subgraph(&verts);
                    let colors: Vec<u8> = verts.iter().map(|v| u8::from(a.contains(v))).collect();
                    let key = (ci, canonical_code_colored(&local, &colors)?);
                    let hit = *self
                        .cache
                        .entry(key)
                        .or_insert_with(|| amalgam_contains(c, &local, &colors));
                    if hit {
                        return Ok(Some(AclWitness {
                            constraint: ci,
                            quotient: code.clone(),
                            occurrence: occ,
                            anchor_part: inside,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Images weakly containing a constraint cannot occur in a host omitting it.
fn contains_member(q: &Graph, cs: &ConstraintSet) -> bool {
    cs.members().iter().any(|c| c.order() <= q.order() && embeds(c, q, EmbeddingMode::Weak))
}

/// `c` embeds in `|c|` copies of `local` glued over its 1-colored vertices.
fn amalgam_contains(c: &Graph, local: &Graph, colors: &[u8]) -> bool {
    let anchor: Vec<usize> = (0..local.order()).filter(|&i| colors[i] == 1).collect();
    let base = local.induced_subgraph(&anchor);
    let image: Vec<usize> = (0..anchor.len()).collect();
    let amalgam = free_amalgam(&base, local, &anchor, &image, c.order()).expect("anchor is induced from the pattern");
    embeds(c, &amalgam, EmbeddingMode::Weak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::bowtie;
    use crate::standard::{complete, cycle};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn examples() {
        let b = ConstraintSet::single(bowtie()).unwrap();
        let w = acl_witness(&complete(3), &set(&[0]), &b).unwrap().unwrap();
        assert_eq!(w.constraint, 0);
        assert_eq!(w.anchor_part, vec![0]);
        assert_eq!(w.occurrence.len(), 3);
        let k3 = ConstraintSet::single(complete(3)).unwrap();
        for v in 0..5 {
            assert!(acl_witness(&cycle(5).unwrap(), &set(&[v]), &k3).unwrap().is_none());
        }
        assert!(acl_witness(&complete(3), &set(&[0, 1]), &b).unwrap().is_none());
        assert!(acl_witness(&bowtie(), &set(&[0]), &b).is_err());
    }
}
