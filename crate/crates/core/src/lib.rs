//! Exact Laplacian spectral counting for unicyclic graphs.
//!
//! The crate builds the cycle, lollipop and compass families, counts
//! Laplacian eigenvalues in half-open intervals by exact symmetric
//! congruence (Sylvester inertia over the rationals), and checks the known
//! lower bounds for `m_G[0,1)` in terms of diameter and girth together with
//! the explicit eigenvalue-1 eigenvectors and characteristic polynomial
//! recurrences that support them.
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`graph`] | graph type, family generators, diameter, cycle decomposition, core reduction, edge-list I/O |
//! | [`exact_linalg`] | rational symmetric matrices, inertia and nullity |
//! | [`spectra`] | Laplacian, exact interval counts and multiplicities, float cross-check |
//! | [`charpoly`] | integer polynomials and characteristic polynomial recurrences |
//! | [`witnesses`] | explicit eigenvalue-1 eigenvectors, verified exactly |
//! | [`bounds`] | bound formulas, domination number, per-graph reports |
//! | [`harness`] | enumeration, verification suites, CSV sweeps |

pub mod bounds;
pub mod charpoly;
pub mod error;
pub mod exact_linalg;
pub mod graph;
pub mod harness;
pub mod spectra;
pub mod witnesses;

pub use error::{Error, Result};
pub use graph::Graph;
