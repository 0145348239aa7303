//! Known results on universal graphs omitting constraints. Display only:
//! nothing here feeds a computation.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogVerdict {
    UniversalExists,
    DoesNotExist,
    Open,
}

impl CatalogVerdict {
    pub fn label(self) -> &'static str {
        match self {
            CatalogVerdict::UniversalExists => "universal exists",
            CatalogVerdict::DoesNotExist => "does not exist",
            CatalogVerdict::Open => "open",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub family: &'static str,
    pub verdict: CatalogVerdict,
    pub source: &'static str,
    /// Bound on `α`, the least size of a set with infinite algebraic
    /// closure, or on closure growth for the positive cases.
    pub bound: Option<&'static str>,
    /// Rule or oracle in this crate exercising the entry, if any.
    pub rule: Option<&'static str>,
}

const fn entry(
    family: &'static str,
    verdict: CatalogVerdict,
    source: &'static str,
    bound: Option<&'static str>,
    rule: Option<&'static str>,
) -> CatalogEntry {
    CatalogEntry {
        family,
        verdict,
        source,
        bound,
        rule,
    }
}

use CatalogVerdict::{DoesNotExist, Open, UniversalExists};

pub const CATALOG: &[CatalogEntry] = &[
    entry("no constraint (the random graph)", UniversalExists, "[Ra]", None, None),
    entry("complete graph K_n", UniversalExists, "free amalgamation", Some("acl(A) = A"), Some("hom-closed")),
    entry(
        "single 2-connected non-complete constraint C",
        DoesNotExist,
        "[FK1]",
        Some("α ≤ 4(2k)^{2g}, k = 2|V(C)| - 1, g = |V(C)| + 1"),
        None,
    ),
    entry(
        "complete bipartite K_{m,n}, m ≤ n",
        DoesNotExist,
        "[KP1]",
        Some("α ≤ 8m-7; acl(A) = A for |A| < m"),
        None,
    ),
    entry(
        "cycle C_l, l ≥ 4",
        DoesNotExist,
        "[ChK]",
        Some("α ≤ 4N+1, N = (14^ν - 1)/13, ν = |V(C)|"),
        None,
    ),
    entry(
        "finite set of cycles, other than all odd cycles up to a bound",
        DoesNotExist,
        "[CS2]",
        Some("α ≤ 4N+1, N = (14^ν - 1)/13, ν the largest cycle order"),
        None,
    ),
    entry("all cycles up to an even bound", DoesNotExist, "[GK]", Some("α ≤ 5"), None),
    entry(
        "odd cycles C_3, C_5, ..., C_{2k+1}",
        UniversalExists,
        "hom-closed constraint set",
        Some("acl(A) = A"),
        Some("theorem4"),
    ),
    entry(
        "constraint set closed under homomorphic image",
        UniversalExists,
        "hom-closed constraint set",
        Some("acl(A) = A"),
        Some("hom-closed"),
    ),
    entry(
        "hom-closed extension H of a base C with a categorical theory",
        UniversalExists,
        "hom-closed extension",
        Some("acl unchanged by adding H"),
        Some("hom-closed-extension-conditional-on-base"),
    ),
    entry(
        "pair {G*(r,n,m), K_{n+1}} built from bouquets of stars",
        UniversalExists,
        "minimal images of G* are G* and K_{n+1}",
        Some("acl(A) = A"),
        Some("prop2"),
    ),
    entry(
        "k-connected constraints",
        Open,
        "connectivity versus free amalgams over small anchors",
        Some("α ≥ k"),
        None,
    ),
    entry(
        "bow-tie (two triangles sharing a vertex)",
        UniversalExists,
        "[Ko]",
        Some("|acl(A)| ≤ 4|A| via special edges"),
        Some("prop1-bowtie"),
    ),
    entry(
        "two triangles sharing a vertex with a path P_n at a non-shared corner",
        UniversalExists,
        "categorical theory from the partial closure cl*",
        None,
        Some("lemma9"),
    ),
    entry(
        "path P_k",
        UniversalExists,
        "[KMP]",
        Some("|cl_1(v)| < k^{3k}; c_k(1) < k^{3k^2}; c_k(1) ≥ k"),
        Some("ck1-lower"),
    ),
    entry(
        "path with at most one additional edge attached",
        UniversalExists,
        "[KMP]",
        None,
        None,
    ),
    entry(
        "K_n with a pendant triangle at one vertex (K_n + K_3)",
        UniversalExists,
        "special sets of cliques",
        Some("|acl(A)| ≤ (n+1)|A|"),
        Some("lemma13"),
    ),
    entry(
        "single connected constraint in general",
        Open,
        "no effective characterization known",
        None,
        None,
    ),
];

/// Entries whose text contains `filter`, ignoring case and the characters
/// `_ { } -` and spaces, so `K_{m,n}` matches `Kmn` and `bow-tie` matches
/// `bowtie`.
pub fn catalog(filter: &str) -> Vec<&'static CatalogEntry> {
    let needle = fold(filter);
    CATALOG
        .iter()
        .filter(|e| {
            needle.is_empty()
                || [Some(e.family), Some(e.source), e.bound, e.rule]
                    .into_iter()
                    .flatten()
                    .any(|s| fold(s).contains(&needle))
        })
        .collect()
}

fn fold(s: &str) -> String {
    s.chars()
        .filter(|c| !matches!(c, '_' | '{' | '}' | '-' | ' '))
        .flat_map(char::to_lowercase)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert_eq!(catalog("").len(), CATALOG.len());
        let bt = catalog("bow-tie");
        assert_eq!(bt.len(), 1);
        assert_eq!(bt[0].verdict, CatalogVerdict::UniversalExists);
        let kmn = catalog("K_{m,n}");
        assert_eq!(kmn.len(), 1);
        assert!(kmn[0].bound.unwrap().contains("8m-7"));
        assert!(catalog("no such family").is_empty());
    }
}
