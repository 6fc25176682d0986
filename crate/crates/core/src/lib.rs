//! Strongly regular graphs, partial quadrangles and their intriguing sets.
//!
//! An *intriguing set* of a strongly regular graph is a vertex set `S` such
//! that every vertex of `S` has exactly `h1` neighbours in `S` and every
//! other vertex has exactly `h2`. The crate builds the graphs and geometries
//! where these sets live, computes everything exactly, enumerates and
//! verifies intriguing sets, and checks the algebra that relates them.
//!
//! Module map:
//!
//! - [`exactmath`]: rationals, GF(q) for q <= 9, exact matrices.
//! - [`graphcore`]: graphs, SRG parameters, idempotents, profiles, orbits.
//! - [`catalog`]: the seven triangle-free strongly regular graphs and S(3,6,22).
//! - [`geometry`]: projective spaces, quadrics, generalised and partial
//!   quadrangles, hemisystems, caps and linear representations.
//! - [`intrigue`]: feasibility, exhaustive enumeration, verification.
//! - [`infinity`]: behaviour of intriguing sets when points are deleted.
//! - [`formats`] and [`cli`]: text file formats and the command-line surface.

pub mod bitset;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod formats;
pub mod geometry;
pub mod graphcore;
pub mod infinity;
pub mod intrigue;

pub use error::{Error, Result};
