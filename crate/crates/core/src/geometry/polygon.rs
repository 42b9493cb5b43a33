//! Boxes, exact planar points and convex cells cut out by halfspaces.

use num_traits::{Signed, Zero};

use super::functional::{AffineFunctional, Halfspace, Sense};
use super::rational::{int, sign, Rational};
use crate::error::{Error, Result};

/// Axis-aligned parameter window `lower ≤ α ≤ upper`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamBox {
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
}

impl ParamBox {
    pub fn new(lower: Vec<Rational>, upper: Vec<Rational>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), got: upper.len() });
        }
        if lower.is_empty() {
            return Err(Error::invalid("box must have at least one coordinate"));
        }
        if lower.iter().zip(&upper).any(|(l, u)| l >= u) {
            return Err(Error::invalid("box needs lower < upper in every coordinate"));
        }
        Ok(Self { lower, upper })
    }

    /// `[lo, hi]^n` with integer bounds.
    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![int(lo); n], vec![int(hi); n])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn contains(&self, alpha: &[Rational]) -> bool {
        alpha.len() == self.dim()
            && alpha.iter().zip(self.lower.iter().zip(&self.upper)).all(|(a, (l, u))| l <= a && a <= u)
    }

    pub fn contains_interior(&self, alpha: &[Rational]) -> bool {
        alpha.len() == self.dim()
            && alpha.iter().zip(self.lower.iter().zip(&self.upper)).all(|(a, (l, u))| l < a && a < u)
    }

    pub fn volume(&self) -> Rational {
        self.lower.iter().zip(&self.upper).map(|(l, u)| u - l).product()
    }

    /// Box faces as weak halfspaces.
    pub fn halfspaces(&self) -> Vec<Halfspace> {
        let n = self.dim();
        let mut out = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = int(1);
            out.push(Halfspace { functional: AffineFunctional::new(e.clone(), self.lower[i].clone()), sense: Sense::Ge });
            out.push(Halfspace { functional: AffineFunctional::new(e, self.upper[i].clone()), sense: Sense::Le });
        }
        out
    }

    /// Minimum and maximum of `Σ c_i α_i` over the box.
    pub fn linear_range(&self, coefficients: &[Rational]) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        for (c, (l, u)) in coefficients.iter().zip(self.lower.iter().zip(&self.upper)) {
            if c.is_negative() {
                lo += c * u;
                hi += c * l;
            } else {
                lo += c * l;
                hi += c * u;
            }
        }
        (lo, hi)
    }

    /// Whether the zero set of `f` meets the open box.
    pub fn line_meets_interior(&self, f: &AffineFunctional) -> bool {
        if f.is_degenerate() {
            return false;
        }
        let (lo, hi) = self.linear_range(&f.coefficients);
        lo < f.constant && f.constant < hi
    }

    /// Whether the zero set of `f` meets the closed box.
    pub fn line_meets_closed(&self, f: &AffineFunctional) -> bool {
        if f.is_degenerate() {
            return false;
        }
        let (lo, hi) = self.linear_range(&f.coefficients);
        lo <= f.constant && f.constant <= hi
    }

    /// Counterclockwise corners of a 2-D box.
    pub fn corners_2d(&self) -> Vec<Point> {
        let (x0, x1) = (&self.lower[0], &self.upper[0]);
        let (y0, y1) = (&self.lower[1], &self.upper[1]);
        vec![
            Point::new(x0.clone(), y0.clone()),
            Point::new(x1.clone(), y0.clone()),
            Point::new(x1.clone(), y1.clone()),
            Point::new(x0.clone(), y1.clone()),
        ]
    }
}

/// Exact point in the plane; ordered lexicographically by `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    pub fn coords(&self) -> Vec<Rational> {
        vec![self.x.clone(), self.y.clone()]
    }

    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(&self.x + (&other.x - &self.x) * t, &self.y + (&other.y - &self.y) * t)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        self.lerp(other, &Rational::new(1.into(), 2.into()))
    }
}

/// Twice the signed area of triangle `abc`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Signed shoelace area of a vertex loop.
pub fn signed_area(vertices: &[Point]) -> Rational {
    let n = vertices.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        acc += &a.x * &b.y - &b.x * &a.y;
    }
    acc / int(2)
}

pub fn centroid_of(vertices: &[Point]) -> Point {
    let n = int(vertices.len() as i64);
    let sx: Rational = vertices.iter().map(|p| p.x.clone()).sum();
    let sy: Rational = vertices.iter().map(|p| p.y.clone()).sum();
    Point::new(sx / &n, sy / n)
}

fn value_at(f: &AffineFunctional, p: &Point) -> Rational {
    &f.coefficients[0] * &p.x + &f.coefficients[1] * &p.y - &f.constant
}

/// Keeps the part of a convex loop where `side * f ≥ 0`.
pub(crate) fn clip_convex(poly: &[Point], f: &AffineFunctional, side: i8) -> Vec<Point> {
    let n = poly.len();
    if n == 0 {
        return Vec::new();
    }
    let vals: Vec<Rational> = poly.iter().map(|p| value_at(f, p) * int(side as i64)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let (vi, vj) = (&vals[i], &vals[j]);
        if !vi.is_negative() {
            out.push(poly[i].clone());
        }
        if (vi.is_positive() && vj.is_negative()) || (vi.is_negative() && vj.is_positive()) {
            let t = vi / (vi - vj);
            out.push(poly[i].lerp(&poly[j], &t));
        }
    }
    cleanup_loop(out)
}

/// Drops repeated and collinear vertices so only extreme points remain.
pub(crate) fn cleanup_loop(mut pts: Vec<Point>) -> Vec<Point> {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    let mut changed = true;
    while changed && pts.len() >= 3 {
        changed = false;
        let n = pts.len();
        for i in 0..n {
            let a = &pts[(i + n - 1) % n];
            let b = &pts[i];
            let c = &pts[(i + 1) % n];
            if orient(a, b, c).is_zero() {
                pts.remove(i);
                changed = true;
                break;
            }
        }
    }
    pts
}

/// Full-dimensional convex polygon with its defining halfspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCell {
    pub halfspaces: Vec<Halfspace>,
    pub vertices: Vec<Point>,
    pub sample: Point,
}

impl ConvexCell {
    pub(crate) fn from_loop(halfspaces: Vec<Halfspace>, vertices: Vec<Point>) -> Option<Self> {
        if vertices.len() < 3 || !signed_area(&vertices).is_positive() {
            return None;
        }
        let sample = centroid_of(&vertices);
        Some(Self { halfspaces, vertices, sample })
    }

    pub fn area(&self) -> Rational {
        signed_area(&self.vertices)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let c = p.coords();
        self.halfspaces.iter().all(|h| h.contains(&c).unwrap_or(false))
    }

    pub fn contains_strictly(&self, p: &Point) -> bool {
        let c = p.coords();
        self.halfspaces.iter().all(|h| h.contains_strictly(&c).unwrap_or(false))
    }
}

/// Intersection of halfspaces with a 2-D box. Returns `None` when the
/// intersection has empty interior. Strict senses only affect the
/// recorded halfspaces; vertices describe the closure.
pub fn polygon_from_halfspaces(hs: &[Halfspace], bx: &ParamBox) -> Result<Option<ConvexCell>> {
    if bx.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: bx.dim() });
    }
    for h in hs {
        if h.functional.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: h.functional.dim() });
        }
        if h.functional.is_degenerate() {
            return Err(Error::Degenerate);
        }
    }
    let mut poly = bx.corners_2d();
    for h in hs {
        let side = match h.sense {
            Sense::Ge | Sense::Gt => 1,
            Sense::Le | Sense::Lt => -1,
        };
        poly = clip_convex(&poly, &h.functional, side);
        if poly.len() < 3 {
            return Ok(None);
        }
    }
    let mut all = hs.to_vec();
    all.extend(bx.halfspaces());
    Ok(ConvexCell::from_loop(all, poly))
}

/// Sign of `f` at `p`.
pub fn side_of(f: &AffineFunctional, p: &Point) -> i8 {
    sign(&value_at(f, p))
}
