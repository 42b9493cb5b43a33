//! Chamber decomposition of a parameter box by the walls of a chain type,
//! with point location and adjacency queries.
//!
//! A chamber is a relatively open cell of the arrangement: a full-dimensional
//! region, an open segment of a wall, or a point where walls meet. Chambers
//! are identified by their sign vectors over the line list and numbered in
//! lexicographic order of their sample points.

use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use crate::chain::{ChainType, StabilityParameter};
use crate::error::{Error, Result};
use crate::geometry::arrangement::{arrangement_2d, dedup_lines, SignVector};
use crate::geometry::functional::{AffineFunctional, Halfspace};
use crate::geometry::polygon::ParamBox;
use crate::geometry::rational::{int, sign, Rational};
use crate::params::walls::{enumerate_walls, Wall};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: usize,
    /// 2, 1 or 0 for two parameters; 1 or 0 for one.
    pub dim: usize,
    pub sample: Vec<Rational>,
    pub signs: SignVector,
    /// Vertices of the closure: polygon corners, segment ends, or the point.
    pub closure: Vec<Vec<Rational>>,
    /// Lines whose zero set meets the closure along a facet, or the lines
    /// through a lower-dimensional chamber.
    pub bounding_lines: Vec<usize>,
    /// For full-dimensional chambers, the full-dimensional chambers across a
    /// facet; otherwise the chambers one dimension up containing this one in
    /// their closure.
    pub neighbors: Vec<usize>,
    /// Area (two parameters) or length (one) of a full-dimensional chamber.
    pub measure: Option<Rational>,
}

#[derive(Clone, Debug)]
pub struct ChamberDecomposition {
    /// Proper walls of the type, in enumeration order.
    pub walls: Vec<Wall>,
    /// Canonical lines of the arrangement: the walls first, then extra lines.
    pub lines: Vec<AffineFunctional>,
    pub bx: ParamBox,
    pub chambers: Vec<Chamber>,
    index: HashMap<SignVector, usize>,
}

/// Decomposition of `bx` by the proper walls of `t`.
pub fn chamber_decomposition(t: &ChainType, bx: &ParamBox) -> Result<ChamberDecomposition> {
    chamber_decomposition_with_lines(t, bx, &[])
}

/// As [`chamber_decomposition`], refined by further lines such as the
/// boundary of a region of interest.
pub fn chamber_decomposition_with_lines(
    t: &ChainType,
    bx: &ParamBox,
    extra: &[AffineFunctional],
) -> Result<ChamberDecomposition> {
    let walls = enumerate_walls(t, bx)?.walls;
    let mut lines: Vec<AffineFunctional> = walls.iter().map(|w| w.functional.clone()).collect();
    lines.extend(extra.iter().cloned());
    let mut d = ChamberDecomposition::from_lines(&lines, bx)?;
    d.walls = walls;
    Ok(d)
}

impl ChamberDecomposition {
    /// Decomposition by an arbitrary list of lines (points when `n = 1`).
    pub fn from_lines(lines: &[AffineFunctional], bx: &ParamBox) -> Result<Self> {
        for l in lines {
            if l.dim() != bx.dim() {
                return Err(Error::DimensionMismatch { expected: bx.dim(), got: l.dim() });
            }
            if l.is_degenerate() {
                return Err(Error::Degenerate);
            }
        }
        let lines: Vec<AffineFunctional> = dedup_lines(lines)
            .iter()
            .map(AffineFunctional::canonical)
            .filter(|l| bx.line_meets_closed(l))
            .collect();
        let mut chambers = match bx.dim() {
            1 => cells_1d(&lines, bx),
            2 => cells_2d(&lines, bx)?,
            n => return Err(Error::precondition("two-parameter-enumeration", format!("n = {n}"))),
        };
        // Renumber by (sample, dim) and remap references.
        let mut order: Vec<usize> = (0..chambers.len()).collect();
        order.sort_by(|&a, &b| (&chambers[a].sample, chambers[a].dim).cmp(&(&chambers[b].sample, chambers[b].dim)));
        let mut new_id = vec![0; chambers.len()];
        for (k, &old) in order.iter().enumerate() {
            new_id[old] = k;
        }
        for c in chambers.iter_mut() {
            c.id = new_id[c.id];
            for n in c.neighbors.iter_mut() {
                *n = new_id[*n];
            }
            c.neighbors.sort_unstable();
        }
        chambers.sort_by_key(|c| c.id);
        let index = chambers.iter().map(|c| (c.signs.clone(), c.id)).collect();
        Ok(Self { walls: Vec::new(), lines, bx: bx.clone(), chambers, index })
    }

    pub fn n(&self) -> usize {
        self.bx.dim()
    }

    pub fn full_dimensional(&self) -> impl Iterator<Item = &Chamber> {
        let n = self.n();
        self.chambers.iter().filter(move |c| c.dim == n)
    }

    pub fn count_full_dimensional(&self) -> usize {
        self.full_dimensional().count()
    }

    /// Sum of the measures of the full-dimensional chambers.
    pub fn total_measure(&self) -> Rational {
        self.full_dimensional().filter_map(|c| c.measure.clone()).fold(int(0), |a, b| a + b)
    }

    pub fn signs_at(&self, alpha: &[Rational]) -> Result<SignVector> {
        self.lines.iter().map(|l| Ok(sign(&l.evaluate(alpha)?))).collect()
    }

    /// The chamber containing `α` (free coordinates). Points on walls go to
    /// the lower-dimensional chamber they lie in.
    pub fn locate(&self, alpha: &[Rational]) -> Result<usize> {
        if alpha.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: alpha.len() });
        }
        if !self.bx.contains(alpha) {
            return Err(Error::OutsideBox);
        }
        let s = self.signs_at(alpha)?;
        self.index.get(&s).copied().ok_or_else(|| Error::NotFound(format!("no chamber with signs {s:?}")))
    }

    pub fn locate_parameter(&self, alpha: &StabilityParameter) -> Result<usize> {
        self.locate(alpha.free())
    }

    pub fn by_signs(&self, signs: &[i8]) -> Option<&Chamber> {
        self.index.get(signs).map(|&i| &self.chambers[i])
    }

    /// Index of `line` in the arrangement together with the sign relating
    /// the given functional to the stored canonical one.
    pub fn line_index(&self, line: &AffineFunctional) -> Option<(usize, i8)> {
        let (canon, s) = line.canonical_with_sign();
        self.lines.iter().position(|l| *l == canon).map(|i| (i, s))
    }

    /// The unique full-dimensional chamber on the `side` (`+1` or `-1`, as
    /// the sign of `line`) of `line`, touching it along a facet, and lying
    /// in `region` when one is given.
    pub fn chamber_adjacent_to_line(
        &self,
        region: Option<&[Halfspace]>,
        line: &AffineFunctional,
        side: i8,
    ) -> Result<usize> {
        if side != 1 && side != -1 {
            return Err(Error::invalid("side must be +1 or -1"));
        }
        if line.dim() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: line.dim() });
        }
        if !self.bx.line_meets_closed(line) {
            return Err(Error::OutsideBox);
        }
        let (k, s) = self.line_index(line).ok_or_else(|| Error::NotFound("line is not in the arrangement".into()))?;
        let want = side * s;
        let mut candidates = BTreeSet::new();
        for facet in self.chambers.iter().filter(|c| c.dim + 1 == self.n() && c.signs[k] == 0) {
            for &nb in &facet.neighbors {
                let c = &self.chambers[nb];
                if c.signs[k] != want {
                    continue;
                }
                let inside = match region {
                    None => true,
                    Some(hs) => hs.iter().all(|h| h.contains(&c.sample).unwrap_or(false)),
                };
                if inside {
                    candidates.insert(nb);
                }
            }
        }
        match candidates.len() {
            0 => Err(Error::NotFound("no adjacent chamber in the box".into())),
            1 => Ok(*candidates.iter().next().expect("one candidate")),
            _ => Err(Error::Ambiguous { candidates: candidates.into_iter().collect() }),
        }
    }
}

fn cells_2d(lines: &[AffineFunctional], bx: &ParamBox) -> Result<Vec<Chamber>> {
    let arr = arrangement_2d(lines, bx)?;
    debug_assert_eq!(arr.lines, lines);
    let strata = arr.strata_index();
    let nf = arr.faces.len();
    let ne = arr.edges.len();
    let mut out: Vec<Chamber> = Vec::with_capacity(nf + ne + arr.vertices.len());
    for (i, f) in arr.faces.iter().enumerate() {
        out.push(Chamber {
            id: i,
            dim: 2,
            sample: f.cell.sample.coords(),
            signs: f.signs.clone(),
            closure: f.cell.vertices.iter().map(|p| p.coords()).collect(),
            bounding_lines: Vec::new(),
            neighbors: Vec::new(),
            measure: Some(f.cell.area()),
        });
    }
    for (i, e) in arr.edges.iter().enumerate() {
        let beside = arr.faces_beside(i, &strata);
        if let [a, b] = beside[..] {
            out[a].neighbors.push(b);
            out[b].neighbors.push(a);
        }
        for &f in &beside {
            out[f].bounding_lines.push(e.line);
        }
        out.push(Chamber {
            id: nf + i,
            dim: 1,
            sample: e.midpoint.coords(),
            signs: e.signs.clone(),
            closure: vec![e.start.coords(), e.end.coords()],
            bounding_lines: zero_positions(&e.signs),
            neighbors: beside,
            measure: None,
        });
    }
    for (i, v) in arr.vertices.iter().enumerate() {
        // Edges whose closure contains the vertex.
        let incident: Vec<usize> = arr
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.start == v.point || e.end == v.point)
            .map(|(j, _)| nf + j)
            .collect();
        out.push(Chamber {
            id: nf + ne + i,
            dim: 0,
            sample: v.point.coords(),
            signs: v.signs.clone(),
            closure: vec![v.point.coords()],
            bounding_lines: zero_positions(&v.signs),
            neighbors: incident,
            measure: None,
        });
    }
    for c in out.iter_mut().take(nf) {
        c.neighbors.sort_unstable();
        c.neighbors.dedup();
        c.bounding_lines.sort_unstable();
        c.bounding_lines.dedup();
    }
    Ok(out)
}

fn cells_1d(lines: &[AffineFunctional], bx: &ParamBox) -> Vec<Chamber> {
    let (lo, hi) = (bx.lower[0].clone(), bx.upper[0].clone());
    let roots: Vec<Rational> = lines.iter().map(|l| &l.constant / &l.coefficients[0]).collect();
    let mut cuts: Vec<Rational> = roots.iter().filter(|x| **x > lo && **x < hi).cloned().collect();
    cuts.push(lo.clone());
    cuts.push(hi.clone());
    cuts.sort();
    cuts.dedup();
    let signs_at = |x: &Rational| -> SignVector {
        lines.iter().map(|l| sign(&l.evaluate(std::slice::from_ref(x)).expect("1-D line"))).collect()
    };
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let mid = (&w[0] + &w[1]) / int(2);
        out.push(Chamber {
            id: out.len(),
            dim: 1,
            signs: signs_at(&mid),
            sample: vec![mid],
            closure: vec![vec![w[0].clone()], vec![w[1].clone()]],
            bounding_lines: Vec::new(),
            neighbors: Vec::new(),
            measure: Some(&w[1] - &w[0]),
        });
    }
    let segments = out.len();
    let mut points: Vec<Rational> = roots.clone();
    points.sort();
    points.dedup();
    for x in points {
        let touching: Vec<usize> = (0..segments)
            .filter(|&s| out[s].closure.iter().any(|e| e[0] == x))
            .collect();
        let on: Vec<usize> = (0..lines.len()).filter(|&k| roots[k] == x).collect();
        if let [a, b] = touching[..] {
            out[a].neighbors.push(b);
            out[b].neighbors.push(a);
        }
        for &s in &touching {
            out[s].bounding_lines.extend(on.iter().copied());
        }
        let id = out.len();
        out.push(Chamber {
            id,
            dim: 0,
            signs: signs_at(&x),
            sample: vec![x.clone()],
            closure: vec![vec![x]],
            bounding_lines: on,
            neighbors: touching,
            measure: None,
        });
    }
    for c in out.iter_mut().take(segments) {
        c.bounding_lines.sort_unstable();
        c.bounding_lines.dedup();
    }
    out
}

fn zero_positions(s: &[i8]) -> Vec<usize> {
    s.iter().enumerate().filter(|(_, v)| v.is_zero()).map(|(i, _)| i).collect()
}
