//! Labeled systems of halfspaces.

use num_traits::Signed;

use crate::error::Result;
use crate::geometry::functional::{AffineFunctional, Halfspace, Sense};
use crate::geometry::polygon::{polygon_from_halfspaces, ConvexCell, ParamBox};
use crate::geometry::rational::{int, Rational};

/// A halfspace together with the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledHalfspace {
    pub label: String,
    pub halfspace: Halfspace,
}

impl LabeledHalfspace {
    pub fn new(label: impl Into<String>, halfspace: Halfspace) -> Self {
        Self { label: label.into(), halfspace }
    }

    /// `Σ c_i α_i sense rhs` with integer data.
    pub fn ints(label: impl Into<String>, coefficients: &[i64], sense: Sense, rhs: Rational) -> Result<Self> {
        let c = coefficients.iter().map(|&x| int(x)).collect();
        Ok(Self::new(label, Halfspace::from_lhs_rhs(c, sense, rhs)?))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegionReport {
    pub halfspaces: Vec<LabeledHalfspace>,
    /// Lines that are drawn alongside the region but do not bound it.
    pub annotations: Vec<LabeledHalfspace>,
    pub cell: Option<ConvexCell>,
}

impl RegionReport {
    pub fn new(halfspaces: Vec<LabeledHalfspace>) -> Self {
        Self { halfspaces, annotations: Vec::new(), cell: None }
    }

    pub fn get(&self, label: &str) -> Option<&Halfspace> {
        self.halfspaces.iter().find(|h| h.label == label).map(|h| &h.halfspace)
    }

    pub fn labels(&self) -> Vec<&str> {
        self.halfspaces.iter().map(|h| h.label.as_str()).collect()
    }

    pub fn plain(&self) -> Vec<Halfspace> {
        self.halfspaces.iter().map(|h| h.halfspace.clone()).collect()
    }

    pub fn contains(&self, alpha: &[Rational]) -> Result<bool> {
        for h in &self.halfspaces {
            if !h.halfspace.contains(alpha)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn contains_strictly(&self, alpha: &[Rational]) -> Result<bool> {
        for h in &self.halfspaces {
            if !h.halfspace.contains_strictly(alpha)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The region clipped to `bx`, or `None` when that has empty interior.
    pub fn cell_in(&self, bx: &ParamBox) -> Result<Option<ConvexCell>> {
        polygon_from_halfspaces(&self.plain(), bx)
    }

    pub fn with_cell(mut self, bx: &ParamBox) -> Result<Self> {
        self.cell = self.cell_in(bx)?;
        Ok(self)
    }

    /// Whether the recession cone of the planar region is trivial, i.e. the
    /// region is bounded whenever it is nonempty.
    pub fn is_bounded_2d(&self) -> bool {
        let normals: Vec<(&AffineFunctional, i8)> = self
            .halfspaces
            .iter()
            .filter(|h| h.halfspace.functional.dim() == 2)
            .map(|h| {
                let s = match h.halfspace.sense {
                    Sense::Ge | Sense::Gt => 1,
                    Sense::Le | Sense::Lt => -1,
                };
                (&h.halfspace.functional, s)
            })
            .collect();
        if normals.is_empty() {
            return false;
        }
        // A nonzero closed cone in the plane contains a ray along the
        // boundary line of one of its constraints.
        for (f, _) in &normals {
            let (a, b) = (&f.coefficients[0], &f.coefficients[1]);
            for dir in [(-b.clone(), a.clone()), (b.clone(), -a.clone())] {
                let inside = normals.iter().all(|(g, s)| {
                    let v = &g.coefficients[0] * &dir.0 + &g.coefficients[1] * &dir.1;
                    !(v * int(*s as i64)).is_negative()
                });
                if inside {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(label: &str, c: &[i64], s: Sense, k: i64) -> LabeledHalfspace {
        LabeledHalfspace::ints(label, c, s, int(k)).unwrap()
    }

    #[test]
    fn boundedness() {
        let tri = RegionReport::new(vec![
            h("a", &[1, 0], Sense::Ge, 0),
            h("b", &[0, 1], Sense::Ge, 0),
            h("c", &[1, 1], Sense::Le, 1),
        ]);
        assert!(tri.is_bounded_2d());
        let wedge = RegionReport::new(vec![h("a", &[1, 0], Sense::Ge, 0), h("b", &[0, 1], Sense::Ge, 0)]);
        assert!(!wedge.is_bounded_2d());
        let strip = RegionReport::new(vec![h("a", &[1, 1], Sense::Ge, 0), h("b", &[1, 1], Sense::Le, 3)]);
        assert!(!strip.is_bounded_2d());
    }

    #[test]
    fn cell_and_lookup() {
        let tri = RegionReport::new(vec![
            h("a", &[1, 0], Sense::Ge, 0),
            h("b", &[0, 1], Sense::Ge, 0),
            h("c", &[1, 1], Sense::Le, 1),
        ]);
        let bx = ParamBox::cube(2, -5, 5).unwrap();
        let cell = tri.cell_in(&bx).unwrap().unwrap();
        assert_eq!(cell.area(), crate::geometry::rational::rat(1, 2));
        assert!(tri.get("c").is_some());
        assert_eq!(tri.labels(), vec!["a", "b", "c"]);
    }
}
