//! Exact rational linear geometry: functionals, halfspaces, boxes, convex
//! cells and planar arrangements.

pub mod arrangement;
pub mod functional;
pub mod polygon;
pub mod rational;

pub use arrangement::{arrangement_2d, Arrangement, Edge, Face, SignVector, Stratum, Vertex};
pub use functional::{AffineFunctional, Halfspace, Sense};
pub use polygon::{polygon_from_halfspaces, ConvexCell, ParamBox, Point};
pub use rational::{format_rational, int, parse_rational, rat, Rational};

/// `evaluate(f, α)` as a free function.
pub fn evaluate(f: &AffineFunctional, alpha: &[Rational]) -> crate::Result<Rational> {
    f.evaluate(alpha)
}
