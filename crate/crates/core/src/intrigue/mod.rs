//! Intriguing sets of strongly regular graphs: certificates, feasible
//! parameters, exhaustive enumeration, verification and closure operations.

mod certificate;
mod closure;
mod search;

pub use certificate::{feasible_params, verify, FeasibleRow, IntrigueCertificate, Sign, Verifier};
pub use closure::{complement, difference, intersection_check, intersection_table, union, Derived};
pub use search::{brute_force_regular_sets, enumerate, EnumerateOptions, Enumeration, Found};
