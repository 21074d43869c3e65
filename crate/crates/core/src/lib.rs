//! Exact lattice-polytope computations for the curves appearing in the
//! Batyrev mirror construction.
//!
//! The crate provides:
//!
//! - [`linalg`]: arbitrary-precision integer matrices, exact rank,
//!   Hermite normal form, and saturated lattice bases;
//! - [`polytope`]: full-dimensional lattice polytopes in dimension 2 to 4,
//!   polar duality, face lattices, and face-to-dual-face pairing;
//! - [`faces`]: lattice point counts and areas of edges and 2-faces;
//! - [`mirror`]: the counting invariants, Hodge diamond, and Euler numbers
//!   of the perverse curve of a reflexive 4-polytope, with a full
//!   verification report for the polytope and its polar dual;
//! - [`config`]: standalone curve configurations with triple points, their
//!   boundary matrix, and Hodge data;
//! - [`corpus`]: the sixteen reflexive polygons, products, and the bundled
//!   test corpus.
//!
//! All arithmetic is exact; no floating point appears anywhere.

pub mod config;
pub mod corpus;
pub mod error;
pub mod faces;
pub mod linalg;
pub mod mirror;
pub mod polytope;

pub use error::{Error, Result};
pub use polytope::{Face, LatticePolytope, ReflexivePair};
