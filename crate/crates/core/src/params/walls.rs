//! Subchain signatures, the walls they define, and wall enumeration.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chain::ChainType;
use crate::error::{Error, Result};
use crate::geometry::functional::{AffineFunctional, Halfspace, Sense};
use crate::geometry::polygon::ParamBox;
use crate::geometry::rational::{int, Rational};

/// Ranks `s_j` and total degree `e` of a prospective subchain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubchainSignature {
    pub s: Vec<i64>,
    pub e: i64,
}

impl SubchainSignature {
    pub fn new(s: Vec<i64>, e: i64) -> Self {
        Self { s, e }
    }

    pub fn total_rank(&self) -> i64 {
        self.s.iter().sum()
    }

    pub fn validate(&self, t: &ChainType) -> Result<()> {
        if self.s.len() != t.len() {
            return Err(Error::DimensionMismatch { expected: t.len(), got: self.s.len() });
        }
        if let Some(j) = (0..t.len()).find(|&j| self.s[j] < 0 || self.s[j] > t.ranks[j]) {
            return Err(Error::invalid(format!("s_{j} = {} outside 0..={}", self.s[j], t.ranks[j])));
        }
        let s = self.total_rank();
        if s == 0 || s == t.total_rank() {
            return Err(Error::invalid("a signature needs 0 < Σs_j < Σr_j"));
        }
        Ok(())
    }

    /// The complementary signature `(r − s; d − e)`.
    pub fn complement(&self, t: &ChainType) -> Self {
        Self {
            s: t.ranks.iter().zip(&self.s).map(|(r, s)| r - s).collect(),
            e: t.total_degree() - self.e,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WallKind {
    Proper,
    /// The equation holds everywhere.
    Improper,
    /// The equation holds nowhere.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub functional: AffineFunctional,
    pub signature: SubchainSignature,
    pub kind: WallKind,
}

impl Wall {
    /// The side on which the subchain does not destabilize.
    pub fn semistable_side(&self) -> Option<Halfspace> {
        Halfspace::new(self.functional.clone(), Sense::Ge).ok()
    }
}

/// Raw coefficients `r_j s − s_j r` (`j ≥ 1`) and constant `r e − s d`.
pub fn signature_functional(t: &ChainType, sigma: &SubchainSignature) -> AffineFunctional {
    let (r, d) = (t.total_rank(), t.total_degree());
    let s = sigma.total_rank();
    let coefficients = (1..t.len()).map(|j| int(t.ranks[j] * s - sigma.s[j] * r)).collect();
    AffineFunctional::new(coefficients, int(r * sigma.e - s * d))
}

fn kind_of(f: &AffineFunctional) -> WallKind {
    if !f.is_degenerate() {
        WallKind::Proper
    } else if f.constant.is_zero() {
        WallKind::Improper
    } else {
        WallKind::Empty
    }
}

pub fn wall_for_signature(t: &ChainType, sigma: &SubchainSignature) -> Result<Wall> {
    sigma.validate(t)?;
    let raw = signature_functional(t, sigma);
    let kind = kind_of(&raw);
    let functional = if kind == WallKind::Proper { raw.canonical() } else { raw };
    Ok(Wall { functional, signature: sigma.clone(), kind })
}

/// Every rank vector `0 ≤ s ≤ r` with `0 < Σs < Σr`, in lexicographic order.
pub fn rank_signatures(t: &ChainType) -> Vec<Vec<i64>> {
    let total = t.total_rank();
    let mut out = vec![Vec::new()];
    for &r in &t.ranks {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (0..=r).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.retain(|s| {
        let k: i64 = s.iter().sum();
        k > 0 && k < total
    });
    out
}

#[derive(Clone, Debug, Default)]
pub struct WallSet {
    /// Proper walls meeting the closed box, one per line.
    pub walls: Vec<Wall>,
    /// Signatures whose wall is all of parameter space.
    pub improper: Vec<SubchainSignature>,
}

impl WallSet {
    pub fn functionals(&self) -> Vec<AffineFunctional> {
        self.walls.iter().map(|w| w.functional.clone()).collect()
    }
}

fn ceil_div(a: &Rational, b: i64) -> i64 {
    let q = a / int(b);
    q.ceil().to_integer().try_into().expect("degree bound fits in i64")
}

fn floor_div(a: &Rational, b: i64) -> i64 {
    let q = a / int(b);
    q.floor().to_integer().try_into().expect("degree bound fits in i64")
}

/// All proper walls meeting `bx`, deduplicated by canonical form, in the
/// order of their first signature. Supports one and two parameters.
pub fn enumerate_walls(t: &ChainType, bx: &ParamBox) -> Result<WallSet> {
    let n = t.n();
    if n != 1 && n != 2 {
        return Err(Error::precondition("two-parameter-enumeration", format!("n = {n}; walls are enumerated for n ≤ 2")));
    }
    if bx.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: bx.dim() });
    }
    let (r, d) = (t.total_rank(), t.total_degree());
    let mut set = WallSet::default();
    let mut seen = HashSet::new();
    for s in rank_signatures(t) {
        let sum: i64 = s.iter().sum();
        let coeffs: Vec<Rational> = (1..t.len()).map(|j| int(t.ranks[j] * sum - s[j] * r)).collect();
        if coeffs.iter().all(Zero::is_zero) {
            if (sum * d).is_multiple_of(&r) {
                set.improper.push(SubchainSignature::new(s, sum * d / r));
            }
            continue;
        }
        // r·e − s·d must lie in the range of Σ c_j α_j over the box.
        let (lo, hi) = bx.linear_range(&coeffs);
        let sd = int(sum * d);
        let (e_lo, e_hi) = (ceil_div(&(lo + &sd), r), floor_div(&(hi + &sd), r));
        for e in e_lo..=e_hi {
            let wall = wall_for_signature(t, &SubchainSignature::new(s.clone(), e))?;
            if seen.insert(wall.functional.clone()) {
                set.walls.push(wall);
            }
        }
    }
    Ok(set)
}

/// Whether some signature yields an improper wall, searched over all rank
/// vectors. Equivalent to `gcd(r_0, …, r_n, d) > 1`.
pub fn has_improper_walls(t: &ChainType) -> bool {
    improper_signature(t).is_some()
}

pub fn improper_signature(t: &ChainType) -> Option<SubchainSignature> {
    let (r, d) = (t.total_rank(), t.total_degree());
    rank_signatures(t).into_iter().find_map(|s| {
        let sum: i64 = s.iter().sum();
        let flat = (1..t.len()).all(|j| t.ranks[j] * sum == s[j] * r);
        (flat && (sum * d).is_multiple_of(&r)).then(|| SubchainSignature::new(s, sum * d / r))
    })
}

/// `gcd(r_0, …, r_n, d)`.
pub fn rank_degree_gcd(t: &ChainType) -> i64 {
    t.ranks.iter().fold(t.total_degree().abs(), |g, &r| g.gcd(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    fn t(r: &[i64], d: &[i64]) -> ChainType {
        ChainType::of(r, d)
    }

    fn sig(s: &[i64], e: i64) -> SubchainSignature {
        SubchainSignature::new(s.to_vec(), e)
    }

    #[test]
    fn signature_walls() {
        let w = wall_for_signature(&t(&[2, 1], &[3, 1]), &sig(&[1, 1], 2)).unwrap();
        assert_eq!(w.kind, WallKind::Proper);
        assert_eq!(w.functional, AffineFunctional::new(vec![int(1)], int(2)));
        let w = wall_for_signature(&t(&[2, 1], &[3, 1]), &sig(&[2, 0], 3)).unwrap();
        assert_eq!(w.functional, AffineFunctional::new(vec![int(2)], int(1)));
        assert_eq!(&w.functional.constant / &w.functional.coefficients[0], rat(1, 2));
        let w = wall_for_signature(&t(&[2, 2], &[1, 1]), &sig(&[1, 1], 1)).unwrap();
        assert_eq!(w.kind, WallKind::Improper);
        let w = wall_for_signature(&t(&[2, 2], &[1, 1]), &sig(&[1, 1], 0)).unwrap();
        assert_eq!(w.kind, WallKind::Empty);
        assert!(wall_for_signature(&t(&[2, 1], &[3, 1]), &sig(&[3, 0], 1)).is_err());
        assert!(wall_for_signature(&t(&[2, 1], &[3, 1]), &sig(&[2, 1], 1)).is_err());
    }

    #[test]
    fn complement_gives_same_wall() {
        let ty = t(&[1, 1, 1], &[2, 1, 0]);
        let s = sig(&[1, 1, 0], 1);
        let a = wall_for_signature(&ty, &s).unwrap();
        let b = wall_for_signature(&ty, &s.complement(&ty)).unwrap();
        assert_eq!(a.functional, b.functional);
    }

    #[test]
    fn interval_walls() {
        let set = enumerate_walls(&t(&[1, 1], &[1, 0]), &ParamBox::cube(1, 0, 5).unwrap()).unwrap();
        let mut pts: Vec<Rational> =
            set.walls.iter().map(|w| &w.functional.constant / &w.functional.coefficients[0]).collect();
        pts.sort();
        assert_eq!(pts, vec![int(1), int(3), int(5)]);
        assert!(set.improper.is_empty());
    }

    #[test]
    fn improper_walls_follow_gcd() {
        assert!(!has_improper_walls(&t(&[2, 1], &[3, 1])));
        assert!(has_improper_walls(&t(&[2, 2], &[1, 1])));
        assert!(!has_improper_walls(&t(&[3, 1, 1], &[0, 0, 1])));
        let set = enumerate_walls(&t(&[2, 2], &[1, 1]), &ParamBox::cube(1, -3, 3).unwrap()).unwrap();
        assert_eq!(set.improper, vec![sig(&[1, 1], 1)]);
        for r0 in 0..4 {
            for r1 in 0..4 {
                for d in -4..5 {
                    if r0 + r1 < 2 || (r0 == 0 && d != 0) {
                        continue;
                    }
                    let ty = if r1 == 0 { t(&[r0, 0], &[d, 0]) } else { t(&[r0, r1], &[0, d]) };
                    assert_eq!(has_improper_walls(&ty), rank_degree_gcd(&ty) > 1, "{ty}");
                }
            }
        }
    }

    #[test]
    fn three_slot_enumeration_needs_two_parameters() {
        assert!(enumerate_walls(&t(&[1, 1, 1, 1], &[0, 0, 0, 0]), &ParamBox::cube(3, 0, 1).unwrap()).is_err());
    }
}
