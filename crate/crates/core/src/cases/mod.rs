//! Worked closure analyses for three constraint families: the bow-tie,
//! a complete graph with a triangle attached at a vertex, and forbidden
//! paths (ω-values, chains and chain covers).

mod bowtie;
mod chains;
mod knk3;

pub use bowtie::{a_star, bowtie_closure, claims_within, settled, special_edges, BowtieReport, ClaimCheck};
pub use chains::{
    chain_classify, chain_cover, erdos_gallai_audit, free_sequence_audit, omega, omega_bounded, ChainCoverReport,
    ChainKind, ChainReport, EgAudit, End, FreeSequenceAudit, SequenceCondition, SequenceFailure,
};
pub use knk3::{clique_intersection_audit, knk3_closure, Knk3Analysis, special_sets, IntersectionAudit, Knk3Report, StarEntry};
