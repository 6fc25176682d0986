//! Graphs, strongly regular parameters, minimal idempotents, regularity
//! profiles and set orbits under given permutation groups.

mod graph;
mod idempotents;
mod perm;
mod profile;
mod srg;

pub use graph::{Graph, VertexSet};
pub use idempotents::{minimal_idempotents, Idempotents};
pub use perm::{apply_perm, canonical_representative, check_generators, orbits, Permutation, SetOrbit};
pub use profile::{regularity_profile, RegularityProfile};
pub use srg::{srg_params, SrgParams};
