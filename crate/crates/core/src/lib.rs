//! Matching-theory toolkit for bicritical graphs.
//!
//! Covers perfect matchings in general graphs, factor-criticality, deletable
//! and removable edges, the brick decomposition of bicritical graphs along
//! 2-separations with marker-edge bookkeeping, and an exhaustive verification
//! harness that checks the structural theorems about minimal bicritical
//! graphs over every small connected graph.

pub mod canon;
pub mod criticality;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod named;
pub mod scan;
pub mod verify;

pub use canon::{canonical_form, CanonicalCode};
pub use criticality::BrickKind;
pub use decomposition::{brick_decomposition, DecompositionTree, LabeledGraph, SeparationPolicy};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};
pub use matching::{Matching, MatchingEngine};
pub use verify::{Status, VerdictReport};
