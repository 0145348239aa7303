//! Surjective homomorphic images (quotients by partitions into independent
//! sets), the image set and its minimal elements under weak embedding, and
//! homomorphism closure of constraint sets.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canon::{canonical_code, CanonicalCode};
use crate::caps::Caps;
use crate::embed::{embeds, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Partition of the source vertices into classes; a class may not contain
/// an edge since the image would need a loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuotientPartition {
    pub classes: Vec<Vec<usize>>,
}

impl QuotientPartition {
    pub fn discrete(n: usize) -> QuotientPartition {
        QuotientPartition {
            classes: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Class index of each vertex.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut lab = vec![usize::MAX; n];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in c {
                lab[v] = i;
            }
        }
        lab
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    pub fn validate(&self, source: &Graph) -> Result<()> {
        let n = source.order();
        let mut seen = vec![false; n];
        for c in &self.classes {
            if c.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            for &v in c {
                source.check_vertex(v)?;
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two classes")));
                }
                seen[v] = true;
            }
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    if source.has_edge(u, v) {
                        return Err(Error::InvalidPartition(format!(
                            "class contains adjacent pair {u} {v}"
                        )));
                    }
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(())
    }
}

/// Graph on the classes, adjacent iff the source has an edge between them.
pub fn quotient_graph(source: &Graph, p: &QuotientPartition) -> Result<Graph> {
    p.validate(source)?;
    Ok(quotient_unchecked(source, &p.labels(source.order()), p.classes.len()))
}

fn quotient_unchecked(source: &Graph, labels: &[usize], classes: usize) -> Graph {
    let mut q = Graph::empty(classes);
    for (u, v) in source.edges() {
        q.add_edge(labels[u], labels[v]);
    }
    q
}

/// Visits every partition into independent sets as a restricted-growth
/// label vector (vertex 0 gets class 0, each later vertex joins an earlier
/// class or opens the next one), pruning classes that would hold an edge.
pub fn for_each_partition<F: FnMut(&[usize], usize)>(g: &Graph, mut visit: F) {
    let n = g.order();
    let mut labels = vec![usize::MAX; n];
    fn rec<F: FnMut(&[usize], usize)>(g: &Graph, v: usize, classes: usize, labels: &mut [usize], visit: &mut F) {
        if v == g.order() {
            visit(labels, classes);
            return;
        }
        for c in 0..=classes {
            if c < classes && g.neighbors(v).iter().any(|&w| w < v && labels[w] == c) {
                continue;
            }
            labels[v] = c;
            rec(g, v + 1, classes.max(c + 1), labels, visit);
        }
        labels[v] = usize::MAX;
    }
    rec(g, 0, 0, &mut labels, &mut visit);
}

#[derive(Debug, Clone, Serialize)]
pub struct Image {
    pub graph: Graph,
    pub code: CanonicalCode,
    /// Arises from a non-discrete partition (fewer vertices than the source).
    pub proper: bool,
    pub minimal: bool,
    /// First partition in enumeration order realizing this image.
    pub partition: QuotientPartition,
}

#[derive(Debug, Clone, Serialize)]
pub struct ImageSet {
    pub source: Graph,
    /// Sorted by canonical code, one per isomorphism class.
    pub images: Vec<Image>,
}

impl ImageSet {
    pub fn minimal(&self) -> impl Iterator<Item = &Image> {
        self.images.iter().filter(|i| i.minimal)
    }

    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.images.iter().map(|i| i.code.clone()).collect()
    }

    pub fn contains(&self, g: &Graph) -> Result<bool> {
        let code = canonical_code(g)?;
        Ok(self.images.iter().any(|i| i.code == code))
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    let limit = Caps::current().hom;
    if g.order() > limit {
        return Err(Error::CapExceeded {
            name: "hom",
            limit,
            actual: g.order(),
        });
    }
    Ok(())
}

/// All homomorphic images of `g` up to isomorphism, including `g` itself,
/// with minimality flags.
pub fn hom_images(g: &Graph) -> Result<ImageSet> {
    check_cap(g)?;
    let n = g.order();
    let mut found: BTreeMap<CanonicalCode, (Graph, Vec<usize>, usize)> = BTreeMap::new();
    let mut err = None;
    for_each_partition(g, |labels, classes| {
        if err.is_some() {
            return;
        }
        let q = quotient_unchecked(g, labels, classes);
        match canonical_code(&q) {
            Ok(code) => {
                found.entry(code).or_insert_with(|| (q, labels.to_vec(), classes));
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let mut images: Vec<Image> = found
        .into_iter()
        .map(|(code, (graph, labels, classes))| {
            let mut cls = vec![Vec::new(); classes];
            for (v, &l) in labels.iter().enumerate() {
                cls[l].push(v);
            }
            Image {
                proper: graph.order() < n,
                graph,
                code,
                minimal: false,
                partition: QuotientPartition { classes: cls },
            }
        })
        .collect();
    let flags: Vec<bool> = (0..images.len())
        .map(|i| {
            !(0..images.len()).any(|j| {
                j != i
                    && weakly_below(&images[j].graph, &images[i].graph)
            })
        })
        .collect();
    for (img, f) in images.iter_mut().zip(flags) {
        img.minimal = f;
    }
    Ok(ImageSet {
        source: g.clone(),
        images,
    })
}

/// `x` weakly embeds in `y`.
pub fn weakly_below(x: &Graph, y: &Graph) -> bool {
    x.order() <= y.order() && x.size() <= y.size() && embeds(x, y, EmbeddingMode::Weak)
}

/// The ⊑-minimal images only.
pub fn minimal_hom_images(g: &Graph) -> Result<ImageSet> {
    let mut set = hom_images(g)?;
    set.images.retain(|i| i.minimal);
    Ok(set)
}

#[derive(Debug, Clone, Serialize)]
pub struct HomWitness {
    pub constraint: usize,
    pub partition: QuotientPartition,
    pub image: Graph,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomClosure {
    pub closed: bool,
    pub witness: Option<HomWitness>,
}

/// Every proper image of every member weakly contains some member. The
/// witness is the first failing image in (constraint index, image code)
/// order.
pub fn is_hom_closed(members: &[Graph]) -> Result<HomClosure> {
    for (ci, c) in members.iter().enumerate() {
        let set = hom_images(c)?;
        for img in set.images.iter().filter(|i| i.proper) {
            if !members.iter().any(|m| weakly_below(m, &img.graph)) {
                return Ok(HomClosure {
                    closed: false,
                    witness: Some(HomWitness {
                        constraint: ci,
                        partition: img.partition.clone(),
                        image: img.graph.clone(),
                    }),
                });
            }
        }
    }
    Ok(HomClosure {
        closed: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_amalgam;
    use crate::standard::{complete, cycle, path};

    fn code(g: &Graph) -> CanonicalCode {
        canonical_code(g).unwrap()
    }

    fn bowtie() -> Graph {
        vertex_amalgam(&complete(3), 0, &complete(3), 0).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let c4 = cycle(4).unwrap();
        let p = QuotientPartition {
            classes: vec![vec![0, 2], vec![1], vec![3]],
        };
        assert_eq!(code(&quotient_graph(&c4, &p).unwrap()), code(&path(2)));
        let d = QuotientPartition::discrete(4);
        assert_eq!(quotient_graph(&c4, &d).unwrap(), c4);
        // outer pairs of the two triangles: 1~3, 2~4
        let b = QuotientPartition {
            classes: vec![vec![0], vec![1, 3], vec![2, 4]],
        };
        assert_eq!(code(&quotient_graph(&bowtie(), &b).unwrap()), code(&complete(3)));
        let bad = QuotientPartition {
            classes: vec![vec![0, 1], vec![2], vec![3]],
        };
        assert!(quotient_graph(&c4, &bad).is_err());
    }

    #[test]
    fn image_sets() {
        let k4 = hom_images(&complete(4)).unwrap();
        assert_eq!(k4.images.len(), 1);
        let bt = hom_images(&bowtie()).unwrap();
        let proper: Vec<CanonicalCode> = bt.images.iter().filter(|i| i.proper).map(|i| i.code.clone()).collect();
        let mut k4_minus = complete(4);
        k4_minus = Graph::from_edges(4, &k4_minus.edge_vec()[1..]).unwrap();
        let mut expect = vec![code(&k4_minus), code(&complete(3))];
        expect.sort();
        assert_eq!(proper, expect);
        let c5 = hom_images(&cycle(5).unwrap()).unwrap();
        let mut pendant = complete(3);
        let x = pendant.add_vertex();
        pendant.add_edge(0, x);
        for g in [cycle(5).unwrap(), complete(3), pendant] {
            assert!(c5.contains(&g).unwrap());
        }
    }

    #[test]
    fn minimal_examples() {
        let m = minimal_hom_images(&cycle(5).unwrap()).unwrap();
        let mut expect = vec![code(&complete(3)), code(&cycle(5).unwrap())];
        expect.sort();
        assert_eq!(m.codes(), expect);
        let m4 = minimal_hom_images(&cycle(4).unwrap()).unwrap();
        assert_eq!(m4.codes(), vec![code(&complete(2))]);
    }

    #[test]
    fn closure_examples() {
        let odd = [complete(3), cycle(5).unwrap()];
        assert!(is_hom_closed(&odd).unwrap().closed);
        let c5 = is_hom_closed(&[cycle(5).unwrap()]).unwrap();
        assert!(!c5.closed);
        let w = c5.witness.unwrap();
        assert_eq!(code(&w.image), code(&complete(3)));
        assert!(is_hom_closed(&[complete(4)]).unwrap().closed);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            hom_images(&Graph::empty(11)),
            Err(Error::CapExceeded { name: "hom", .. })
        ));
    }
}
