//! Graph machinery for studying universal graphs omitting a finite set of
//! connected constraints: embeddings, homomorphic images, closure operators
//! over free amalgams, the named example constructions, and finite
//! approximants to existentially complete constraint-free graphs.
//!
//! Convention used throughout: the path `P_k` has `k` edges and `k + 1`
//! vertices.

pub mod builder;
pub mod canon;
pub mod caps;
pub mod cases;
pub mod closure;
pub mod constructions;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod grammar;
pub mod graph;
pub mod hom;
pub mod oracles;
pub mod standard;
pub mod structure;

pub use canon::{canonical_code, canonical_code_colored, is_isomorphic, CanonicalCode};
pub use caps::Caps;
pub use embed::{embeddings, EmbeddingMap, EmbeddingMode};
pub use closure::{omits, ClosureReport, ConstraintSet, PairFamily};
pub use error::{Error, Result};
pub use grammar::parse_graph;
pub use hom::{hom_images, minimal_hom_images, ImageSet};
pub use graph::{disjoint_union, free_amalgam, join, vertex_amalgam, Graph, VertexSet};
pub use standard::{standard_graph, StandardGraph};
pub use structure::{blocks, chromatic_number, is_k_connected, is_solid, longest_path_edges, BlockDecomposition};
