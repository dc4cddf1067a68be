//! Word-representability of graphs decided through semi-transitive
//! orientations, with a checker for refutation transcripts and tooling for
//! graphs made of two cliques.

pub mod canon;
pub mod claims;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod orientation;
pub mod proof;
pub mod words;

pub use canon::{canonical_form, CanonicalCode};
pub use embed::{contains_induced, Embedding};
pub use enumerate::enumerate_graphs;
pub use error::{FamilyError, GraphError, OrientationError, TranscriptError, WordError};
pub use graph::{Graph, VertexSet};
pub use graph6::{format_graph6, parse_graph6};
pub use words::{alternates, represents, Word};
