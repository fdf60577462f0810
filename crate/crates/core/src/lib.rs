//! Explicit vector solutions to the MaxCut semidefinite relaxation on
//! d-regular graphs of girth at least 2k.
//!
//! Every vertex vector is supported on the radius-(k−1) ball around its
//! vertex, with one coefficient per distance. The coefficients come from the
//! minimum eigenvector of a k×k weighted path matrix, so every edge ends up
//! with the same inner product σ and hyperplane rounding cuts each edge with
//! probability arccos(σ)/π.
//!
//! - [`spectral`]: path operators, Sturm bisection eigensolver, closed forms.
//! - [`graph`]: adjacency lists, edge-list ingestion, girth certificates,
//!   built-in cages and a random regular generator.
//! - [`solution`]: coefficient profiles and the per-vertex vectors.
//! - [`rounding`]: exact expected cut and seeded Monte Carlo rounding.
//! - [`bounds`]: relative expectation, the Lyons bound, normalized values and
//!   the comparison table.

pub mod bounds;
pub mod error;
pub mod graph;
pub mod rounding;
pub mod solution;
pub mod spectral;

pub use error::{Error, Result};
