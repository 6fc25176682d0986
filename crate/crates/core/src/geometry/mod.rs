//! Finite geometries: projective spaces, incidence geometries, quadrics,
//! derived partial quadrangles, caps and linear representations.

mod cap;
mod derived;
mod hemisystem;
mod incidence;
mod linrep;
mod projective;
mod quadric;

pub use cap::{cap_search, two_intersection_candidates, Cap};
pub use derived::{
    classify_point_set, cone, grid, hemisystem_witness, is_hemisystem, minus_perp, restrict_to_set, Grid,
    PointSetTag, SubGeometry,
};
pub use hemisystem::{find_hemisystem, find_hemisystem_with};
pub use incidence::{collinearity_graph, GeometryKind, IncidenceGeometry};
pub use linrep::{
    hyperplane_affine_set, hyperplane_from_equation, hyperplanes_through, linear_representation, secundum_affine_set,
    LinearRepresentation, SubspaceSet,
};
pub use projective::{decode, encode, normalize, pg_points, ProjectivePoint, ProjectiveSpace};
pub use quadric::{elliptic_gq, parabolic_gq, ClassicalGq, QuadraticForm, QuadricKind};
