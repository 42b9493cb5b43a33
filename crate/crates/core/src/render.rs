//! Deterministic SVG rendering of a two-parameter box with a region and
//! an arrangement of lines. Exact coordinates become floats only when an
//! attribute is written.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::arrangement::line_in_box;
use crate::geometry::functional::AffineFunctional;
use crate::geometry::polygon::{ParamBox, Point};
use crate::geometry::rational::{format_rational, to_f64, Rational};
use crate::params::region::RegionReport;

pub const WIDTH: u32 = 800;
pub const HEIGHT: u32 = 600;
const MARGIN: f64 = 40.0;

/// What to draw. Region boundary lines are the halfspaces of `region`;
/// `walls` are drawn thinner and unlabeled.
#[derive(Clone, Debug)]
pub struct Scene<'a> {
    pub title: String,
    pub bx: &'a ParamBox,
    pub region: Option<&'a RegionReport>,
    pub walls: &'a [AffineFunctional],
}

struct Frame {
    lo: [f64; 2],
    hi: [f64; 2],
}

impl Frame {
    fn x(&self, v: &Rational) -> f64 {
        MARGIN + (to_f64(v) - self.lo[0]) / (self.hi[0] - self.lo[0]) * (WIDTH as f64 - 2.0 * MARGIN)
    }

    fn y(&self, v: &Rational) -> f64 {
        HEIGHT as f64 - MARGIN - (to_f64(v) - self.lo[1]) / (self.hi[1] - self.lo[1]) * (HEIGHT as f64 - 2.0 * MARGIN)
    }

    fn point(&self, p: &Point) -> String {
        format!("{:.3},{:.3}", self.x(&p.x), self.y(&p.y))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

fn segment(f: &AffineFunctional, bx: &ParamBox) -> Option<(Point, Point)> {
    let (p0, dir, tmin, tmax) = line_in_box(f, bx)?;
    if tmin == tmax {
        return None;
    }
    let at = |t: &Rational| Point::new(&p0.x + &dir.x * t, &p0.y + &dir.y * t);
    Some((at(&tmin), at(&tmax)))
}

fn line_element(out: &mut String, frame: &Frame, a: &Point, b: &Point, attrs: &str) {
    let _ = writeln!(
        out,
        r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {attrs}/>"#,
        frame.x(&a.x),
        frame.y(&a.y),
        frame.x(&b.x),
        frame.y(&b.y)
    );
}

/// Renders the scene on an 800×600 canvas.
pub fn render_svg(scene: &Scene) -> Result<String> {
    let bx = scene.bx;
    if bx.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: bx.dim() });
    }
    let frame = Frame {
        lo: [to_f64(&bx.lower[0]), to_f64(&bx.lower[1])],
        hi: [to_f64(&bx.upper[0]), to_f64(&bx.upper[1])],
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&scene.title));
    let _ = writeln!(
        out,
        r#"  <desc>box [{}, {}] × [{}, {}]</desc>"#,
        format_rational(&bx.lower[0]),
        format_rational(&bx.upper[0]),
        format_rational(&bx.lower[1]),
        format_rational(&bx.upper[1])
    );
    let corners = bx.corners_2d();
    let pts: Vec<String> = corners.iter().map(|p| frame.point(p)).collect();
    let _ = writeln!(out, r#"  <polygon class="box" points="{}" fill="white" stroke="black"/>"#, pts.join(" "));

    if let Some(region) = scene.region {
        if let Some(cell) = region.cell_in(bx)? {
            let pts: Vec<String> = cell.vertices.iter().map(|p| frame.point(p)).collect();
            let _ = writeln!(
                out,
                r##"  <polygon class="region" points="{}" fill="#cfe3f7" stroke="none"/>"##,
                pts.join(" ")
            );
        }
    }
    for w in scene.walls {
        if let Some((a, b)) = segment(w, bx) {
            let attrs = format!(
                r##"class="wall" data-equation="{}" stroke="#999999" stroke-width="0.6""##,
                escape(&w.equation("="))
            );
            line_element(&mut out, &frame, &a, &b, &attrs);
        }
    }
    if let Some(region) = scene.region {
        for (k, lh) in region.halfspaces.iter().enumerate() {
            let Some((a, b)) = segment(&lh.halfspace.functional, bx) else { continue };
            let eq = escape(&lh.halfspace.describe());
            let label = escape(&lh.label);
            let attrs = format!(
                r##"class="region-boundary" data-label="{label}" data-equation="{eq}" stroke="#1f4e8c" stroke-width="2""##
            );
            line_element(&mut out, &frame, &a, &b, &attrs);
            let _ = writeln!(
                out,
                r#"  <text class="annotation" x="{:.3}" y="{:.3}" font-size="13">{label}: {eq}</text>"#,
                MARGIN + 6.0,
                MARGIN + 16.0 + 16.0 * k as f64
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::ChainType;
    use crate::params::standard::standard_region;

    #[test]
    fn two_boundary_lines_for_three_line_bundles() {
        let t = ChainType::of(&[1, 1, 1], &[2, 1, 0]);
        let bx = ParamBox::cube(2, -5, 5).unwrap();
        let region = standard_region(&t).unwrap();
        let scene = Scene { title: t.to_string(), bx: &bx, region: Some(&region), walls: &[] };
        let svg = render_svg(&scene).unwrap();
        assert_eq!(svg.matches(r#"class="region-boundary""#).count(), 2);
        assert!(svg.contains("α1 + α2 ≥ 3"));
        assert!(svg.contains("-α1 + 2·α2 ≥ 3"));
        assert_eq!(svg, render_svg(&scene).unwrap());
    }
}
