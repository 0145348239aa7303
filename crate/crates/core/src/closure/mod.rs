//! Closure operators over free amalgams.
//!
//! "Infinitely many disjoint copies" is finitized everywhere to a copy
//! count, by default the largest constraint order `k`: a pattern is free
//! over an anchor when gluing that many fresh copies of it onto the host
//! over the anchor still omits the constraints. Pattern occurrences are weak
//! (not necessarily induced) subgraphs, and glued copies carry only the
//! pattern's edges.

mod acl;
mod basis;
mod free;
mod star;
mod verdict;

pub use acl::{acl_witness, AclSearch, AclWitness};
pub use basis::{path_basis, proper_subgraph_basis, solidity_basis, triangle_path_patterns};
pub use free::{cl_family, cl_levels, cl_pair, is_free, FreeTester};
pub use star::cl_star;
pub use verdict::{homclosure_verdict, Verdict, VerdictStatus};

use serde::Serialize;

use crate::canon::{canonical_code, canonical_code_colored, CanonicalCode};
use crate::embed::{embeds, embeds_touching, EmbeddingMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Nonempty list of connected constraint graphs.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintSet {
    members: Vec<Graph>,
    k: usize,
}

impl ConstraintSet {
    pub fn new(members: Vec<Graph>) -> Result<ConstraintSet> {
        if members.is_empty() {
            return Err(Error::EmptyConstraintSet);
        }
        for (i, c) in members.iter().enumerate() {
            if c.order() == 0 || !c.is_connected() {
                return Err(Error::DisconnectedConstraint(i));
            }
        }
        let k = members.iter().map(Graph::order).max().unwrap_or(0);
        Ok(ConstraintSet { members, k })
    }

    pub fn single(c: Graph) -> Result<ConstraintSet> {
        ConstraintSet::new(vec![c])
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }

    /// Largest member order.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn codes(&self) -> Result<Vec<CanonicalCode>> {
        self.members.iter().map(canonical_code).collect()
    }

    /// Index of the first member with a weak occurrence in `g`.
    pub fn first_violation(&self, g: &Graph) -> Option<usize> {
        self.members.iter().position(|c| embeds(c, g, EmbeddingMode::Weak))
    }

    /// Any constraint occurrence meets one of `fresh`. Used when `g` minus
    /// `fresh` is already known to omit the constraints, since connected
    /// occurrences avoiding `fresh` would lie in that part.
    pub fn violated_touching(&self, g: &Graph, fresh: &[usize]) -> bool {
        self.members
            .iter()
            .any(|c| embeds_touching(c, g, EmbeddingMode::Weak, fresh))
    }
}

/// `g` has no weak occurrence of any member.
pub fn omits(g: &Graph, cs: &ConstraintSet) -> bool {
    cs.first_violation(g).is_none()
}

/// A pattern graph with a designated anchor (sorted, duplicate-free).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnchoredPattern {
    pub pattern: Graph,
    pub anchor: Vec<usize>,
}

impl AnchoredPattern {
    pub fn new(pattern: Graph, mut anchor: Vec<usize>) -> Result<AnchoredPattern> {
        anchor.sort_unstable();
        anchor.dedup();
        for &a in &anchor {
            pattern.check_vertex(a)?;
        }
        Ok(AnchoredPattern { pattern, anchor })
    }

    /// Invariant of the pair up to isomorphism carrying anchor onto anchor.
    pub fn key(&self) -> Result<CanonicalCode> {
        let mut colors = vec![0u8; self.pattern.order()];
        for &a in &self.anchor {
            colors[a] = 1;
        }
        canonical_code_colored(&self.pattern, &colors)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyLabel {
    PathBasis,
    SolidityBasis,
    ProperSubgraphBasis,
    Custom,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairFamily {
    pub label: FamilyLabel,
    pub pairs: Vec<AnchoredPattern>,
}

impl PairFamily {
    /// Deduplicates by anchored isomorphism and sorts by (order, size, key).
    pub fn new(label: FamilyLabel, pairs: Vec<AnchoredPattern>) -> Result<PairFamily> {
        let mut keyed: Vec<(usize, usize, CanonicalCode, AnchoredPattern)> = Vec::new();
        for p in pairs {
            let key = p.key()?;
            if !keyed.iter().any(|(_, _, k, _)| *k == key) {
                keyed.push((p.pattern.order(), p.pattern.size(), key, p));
            }
        }
        keyed.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        Ok(PairFamily {
            label,
            pairs: keyed.into_iter().map(|t| t.3).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureStep {
    /// Canonical code of the matched pattern.
    pub pattern: CanonicalCode,
    /// Image of the pattern anchor.
    pub anchor: Vec<usize>,
    /// Vertices first contributed by this step.
    pub added: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub input: Vec<usize>,
    #[serde(rename = "final")]
    pub final_set: Vec<usize>,
    pub steps: Vec<ClosureStep>,
    pub fixed_point: bool,
    pub budget_exhausted: bool,
}

impl ClosureReport {
    pub fn final_vertices(&self) -> VertexSet {
        self.final_set.iter().copied().collect()
    }
}

/// `b_0 = k`, `b_{n+1} = k + k^2 b_n`, with overflow reported.
pub fn quantifier_bound(k: u64, n: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter("quantifier bound needs k >= 1".into()));
    }
    let k2 = k.checked_mul(k).ok_or(Error::Overflow("quantifier bound"))?;
    let mut b = k;
    for _ in 0..n {
        b = k2
            .checked_mul(b)
            .and_then(|x| x.checked_add(k))
            .ok_or(Error::Overflow("quantifier bound"))?;
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::bowtie;
    use crate::standard::{complete, cycle};

    #[test]
    fn bound_values() {
        assert_eq!(quantifier_bound(3, 0).unwrap(), 3);
        assert_eq!(quantifier_bound(3, 1).unwrap(), 30);
        // 5 + 25 * (5 + 25 * 5)
        assert_eq!(quantifier_bound(5, 2).unwrap(), 5 + 25 * 130);
        assert!(matches!(quantifier_bound(1000, 10), Err(Error::Overflow(_))));
        assert!(quantifier_bound(0, 1).is_err());
    }

    #[test]
    fn omission() {
        let k3 = ConstraintSet::single(complete(3)).unwrap();
        assert!(omits(&cycle(5).unwrap(), &k3));
        let b = ConstraintSet::single(bowtie()).unwrap();
        assert!(!omits(&bowtie(), &b));
        assert!(omits(&complete(4), &b));
        assert!(ConstraintSet::new(vec![]).is_err());
        assert!(ConstraintSet::single(Graph::empty(2)).is_err());
        assert_eq!(ConstraintSet::new(vec![complete(3), cycle(5).unwrap()]).unwrap().k(), 5);
    }

    #[test]
    fn family_dedup() {
        let c = cycle(4).unwrap();
        let f = PairFamily::new(
            FamilyLabel::Custom,
            vec![
                AnchoredPattern::new(c.clone(), vec![0]).unwrap(),
                AnchoredPattern::new(c.clone(), vec![2]).unwrap(),
                AnchoredPattern::new(c, vec![0, 1]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(f.len(), 2);
    }
}
