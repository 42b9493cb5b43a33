//! Planar line arrangements clipped to a box.
//!
//! Faces are produced by repeatedly splitting convex cells. Edges are the
//! pieces of each line between consecutive crossings, and vertices are the
//! points of the closed box where two or more lines meet (or where a line
//! only touches the box).

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};

use super::functional::AffineFunctional;
use super::polygon::{clip_convex, ConvexCell, ParamBox, Point};
use super::rational::{int, sign, Rational};
use crate::error::{Error, Result};

pub type SignVector = Vec<i8>;

#[derive(Clone, Debug)]
pub struct Face {
    pub cell: ConvexCell,
    pub signs: SignVector,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub line: usize,
    pub start: Point,
    pub end: Point,
    pub midpoint: Point,
    pub signs: SignVector,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub point: Point,
    pub lines: Vec<usize>,
    pub signs: SignVector,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    pub lines: Vec<AffineFunctional>,
    pub bx: ParamBox,
    pub faces: Vec<Face>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Vertex>,
}

/// Which stratum a sign vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stratum {
    Face(usize),
    Edge(usize),
    Vertex(usize),
}

pub fn sign_vector(lines: &[AffineFunctional], p: &Point) -> SignVector {
    let c = p.coords();
    lines.iter().map(|f| sign(&f.evaluate(&c).expect("2-D line"))).collect()
}

/// Removes duplicates (by canonical form) while keeping first occurrences.
pub fn dedup_lines(lines: &[AffineFunctional]) -> Vec<AffineFunctional> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for l in lines {
        if seen.insert(l.canonical()) {
            out.push(l.clone());
        }
    }
    out
}

/// Builds the arrangement of `lines` inside `bx`. Lines are deduplicated by
/// canonical form first; the stored lines are the canonical forms.
pub fn arrangement_2d(lines: &[AffineFunctional], bx: &ParamBox) -> Result<Arrangement> {
    if bx.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: bx.dim() });
    }
    for l in lines {
        if l.dim() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: l.dim() });
        }
        if l.is_degenerate() {
            return Err(Error::Degenerate);
        }
    }
    let lines: Vec<AffineFunctional> = dedup_lines(lines).iter().map(|l| l.canonical()).collect();

    let mut polys = vec![bx.corners_2d()];
    for l in &lines {
        let mut next = Vec::with_capacity(polys.len() + 4);
        for poly in polys {
            let signs: Vec<i8> = poly.iter().map(|p| super::polygon::side_of(l, p)).collect();
            if signs.contains(&1) && signs.contains(&-1) {
                let pos = clip_convex(&poly, l, 1);
                let neg = clip_convex(&poly, l, -1);
                next.push(pos);
                next.push(neg);
            } else {
                next.push(poly);
            }
        }
        polys = next;
    }
    let box_hs = bx.halfspaces();
    let mut faces = Vec::new();
    for poly in polys {
        let Some(mut cell) = ConvexCell::from_loop(box_hs.clone(), poly) else { continue };
        let signs = sign_vector(&lines, &cell.sample);
        for (l, s) in lines.iter().zip(&signs) {
            let sense = if *s > 0 { super::functional::Sense::Gt } else { super::functional::Sense::Lt };
            cell.halfspaces.push(super::functional::Halfspace { functional: l.clone(), sense });
        }
        faces.push(Face { cell, signs });
    }

    let mut edges = Vec::new();
    let mut vertex_lines: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
    for (k, l) in lines.iter().enumerate() {
        let Some((p0, dir, tmin, tmax)) = line_in_box(l, bx) else { continue };
        let at = |t: &Rational| Point::new(&p0.x + &dir.x * t, &p0.y + &dir.y * t);
        if tmin == tmax {
            vertex_lines.entry(at(&tmin)).or_default().push(k);
            continue;
        }
        let mut cuts: Vec<Rational> = vec![tmin.clone(), tmax.clone()];
        for (j, other) in lines.iter().enumerate() {
            if j == k {
                continue;
            }
            let v0 = &other.coefficients[0] * &p0.x + &other.coefficients[1] * &p0.y - &other.constant;
            let slope = &other.coefficients[0] * &dir.x + &other.coefficients[1] * &dir.y;
            if slope.is_zero() {
                continue;
            }
            let t = -v0 / slope;
            if t >= tmin && t <= tmax {
                vertex_lines.entry(at(&t)).or_default().push(k);
                cuts.push(t);
            }
        }
        cuts.sort();
        cuts.dedup();
        for w in cuts.windows(2) {
            let (a, b) = (at(&w[0]), at(&w[1]));
            let mid = a.midpoint(&b);
            let signs = sign_vector(&lines, &mid);
            edges.push(Edge { line: k, start: a, end: b, midpoint: mid, signs });
        }
    }
    let vertices = vertex_lines
        .into_iter()
        .map(|(point, mut ls)| {
            ls.sort_unstable();
            ls.dedup();
            let signs = sign_vector(&lines, &point);
            Vertex { point, lines: ls, signs }
        })
        .collect();

    Ok(Arrangement { lines, bx: bx.clone(), faces, edges, vertices })
}

/// Parametrizes `line ∩ box` as `p0 + t·dir` for `t ∈ [tmin, tmax]`.
pub(crate) fn line_in_box(l: &AffineFunctional, bx: &ParamBox) -> Option<(Point, Point, Rational, Rational)> {
    let (a, b) = (&l.coefficients[0], &l.coefficients[1]);
    let dir = Point::new(-b.clone(), a.clone());
    let p0 = if !b.is_zero() {
        Point::new(Rational::zero(), &l.constant / b)
    } else {
        Point::new(&l.constant / a, Rational::zero())
    };
    let mut tmin: Option<Rational> = None;
    let mut tmax: Option<Rational> = None;
    for (base, d, lo, hi) in [
        (&p0.x, &dir.x, &bx.lower[0], &bx.upper[0]),
        (&p0.y, &dir.y, &bx.lower[1], &bx.upper[1]),
    ] {
        if d.is_zero() {
            if base < lo || base > hi {
                return None;
            }
            continue;
        }
        let (mut t0, mut t1) = ((lo - base) / d, (hi - base) / d);
        if d.is_negative() {
            std::mem::swap(&mut t0, &mut t1);
        }
        tmin = Some(match tmin {
            Some(t) if t > t0 => t,
            _ => t0,
        });
        tmax = Some(match tmax {
            Some(t) if t < t1 => t,
            _ => t1,
        });
    }
    let (tmin, tmax) = (tmin?, tmax?);
    if tmin > tmax {
        return None;
    }
    Some((p0, dir, tmin, tmax))
}

impl Arrangement {
    /// Sign-vector index over faces, edges and vertices.
    pub fn strata_index(&self) -> HashMap<SignVector, Stratum> {
        let mut m = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            m.insert(f.signs.clone(), Stratum::Face(i));
        }
        for (i, e) in self.edges.iter().enumerate() {
            m.insert(e.signs.clone(), Stratum::Edge(i));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            m.insert(v.signs.clone(), Stratum::Vertex(i));
        }
        m
    }

    pub fn total_face_area(&self) -> Rational {
        self.faces.iter().map(|f| f.cell.area()).fold(int(0), |a, b| a + b)
    }

    /// The faces on either side of an edge, negative side first.
    pub fn faces_beside(&self, edge: usize, index: &HashMap<SignVector, Stratum>) -> Vec<usize> {
        let e = &self.edges[edge];
        let mut out = Vec::new();
        for s in [-1i8, 1] {
            let mut sv = e.signs.clone();
            sv[e.line] = s;
            if let Some(Stratum::Face(i)) = index.get(&sv) {
                out.push(*i);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: i64, b: i64, c: i64) -> AffineFunctional {
        AffineFunctional::from_ints(&[a, b], c)
    }

    #[test]
    fn empty_arrangement_is_the_box() {
        let bx = ParamBox::cube(2, -1, 1).unwrap();
        let a = arrangement_2d(&[], &bx).unwrap();
        assert_eq!(a.faces.len(), 1);
        assert_eq!(a.total_face_area(), int(4));
    }

    #[test]
    fn crossing_lines_make_four_faces() {
        let bx = ParamBox::cube(2, -2, 2).unwrap();
        let a = arrangement_2d(&[line(1, 0, 0), line(0, 1, 0)], &bx).unwrap();
        assert_eq!(a.faces.len(), 4);
        assert_eq!(a.edges.len(), 4);
        assert_eq!(a.vertices.iter().filter(|v| v.lines.len() >= 2).count(), 1);
        assert_eq!(a.total_face_area(), int(16));
    }

    #[test]
    fn concurrent_lines_make_six_faces() {
        let bx = ParamBox::cube(2, -3, 3).unwrap();
        let a = arrangement_2d(&[line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)], &bx).unwrap();
        assert_eq!(a.faces.len(), 6);
        let center: Vec<_> = a.vertices.iter().filter(|v| v.lines.len() == 3).collect();
        assert_eq!(center.len(), 1);
    }

    #[test]
    fn duplicates_are_merged_and_degenerate_rejected() {
        let bx = ParamBox::cube(2, -3, 3).unwrap();
        let a = arrangement_2d(&[line(1, 1, 1), line(2, 2, 2), line(-1, -1, -1)], &bx).unwrap();
        assert_eq!(a.lines.len(), 1);
        assert_eq!(a.faces.len(), 2);
        assert!(matches!(arrangement_2d(&[line(0, 0, 0)], &bx), Err(Error::Degenerate)));
    }

    #[test]
    fn boundary_line_yields_edges_but_no_split() {
        let bx = ParamBox::cube(2, 0, 2).unwrap();
        let a = arrangement_2d(&[line(1, 0, 2)], &bx).unwrap();
        assert_eq!(a.faces.len(), 1);
        assert_eq!(a.edges.len(), 1);
    }

    #[test]
    fn corner_touching_line_is_a_vertex() {
        let bx = ParamBox::cube(2, 0, 2).unwrap();
        let a = arrangement_2d(&[line(1, 1, 4)], &bx).unwrap();
        assert_eq!(a.faces.len(), 1);
        assert!(a.edges.is_empty());
        assert_eq!(a.vertices.len(), 1);
        assert_eq!(a.vertices[0].point, Point::new(int(2), int(2)));
    }
}
