//! Exact computation of graph resolvability invariants on small graphs.
//!
//! Six invariants are supported: the metric dimension `β`, edge metric
//! dimension `β_E`, mixed metric dimension `β_M`, doubly metric dimension `ψ`,
//! and the two hitting-set invariants `mhs_<` and `mhs_≤` built from the
//! `W_uv` sets of each edge. All of them except `ψ` reduce to an exact minimum
//! hitting set problem over a distance-derived set family.

pub mod closed_forms;
pub mod distance;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod hitting;
pub mod invariants;
pub mod report;
pub mod vertex_set;

pub use distance::{all_pairs_distances, DistanceMatrix};
pub use error::{Error, Result, MAX_VERTICES};
pub use graph::{Edge, Graph};
pub use graph6::{parse_graph6, write_graph6};
pub use hitting::{HittingInstance, HittingSolution};
pub use invariants::{InvariantResult, InvariantTag, Prepared};
pub use vertex_set::{MixedItem, Provenance, SetFamily, VertexSet};
