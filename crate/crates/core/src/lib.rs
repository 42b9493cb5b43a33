//! Exact combinatorics of stability parameters for holomorphic chains on a
//! curve.
//!
//! * [`geometry`]: rational functionals, halfspaces, convex cells, planar
//!   arrangements.
//! * [`chain`]: chain types, slopes, duality, Euler characteristics and
//!   moduli dimensions.
//! * [`linear`]: linear chains (type-A quiver representations), interval
//!   modules, the `V(r)` test and a finite-field semistability oracle.
//! * [`params`]: walls, standard and rank-maximal regions, birationality
//!   boundaries, vanishing predicates, flip bounds and extremal summaries.
//! * [`chambers`]: chamber decomposition, point location and adjacency.
//! * [`render`]: SVG pictures of regions and arrangements.

pub mod chain;
pub mod chambers;
pub mod error;
pub mod geometry;
pub mod linear;
pub mod params;
pub mod render;

pub use error::{Error, Result};
