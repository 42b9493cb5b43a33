//! The boundary of the birationality region: hyperplanes on which the two
//! sides of a type split in `V(r)` have equal α-slope.

use crate::chain::{ChainType, TypeSplit};
use crate::error::{Error, Result};
use crate::geometry::functional::AffineFunctional;
use crate::geometry::polygon::ParamBox;
use crate::geometry::rational::{int, Rational};
use crate::linear::interval::DimensionVector;
use crate::linear::vset::in_v_set;

/// A boundary hyperplane in canonical form with a split realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryHyperplane {
    pub functional: AffineFunctional,
    pub split: TypeSplit,
}

/// A rank split `r = r' + r''` in `V(r)` with the degree data it leaves free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSplit {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
    /// Degree on the left forced by slots the right side does not share,
    /// or `None` when some slot is shared and the left total is free.
    pub forced_left_degree: Option<i64>,
}

/// Total-dimension cap for the interval decompositions behind the `V(r)` test.
pub const SPLIT_DECOMPOSITION_CAP: usize = 30;

fn dims(r: &[i64]) -> Result<DimensionVector> {
    DimensionVector::from_ranks(r)
}

/// All splits of the ranks of `t` into two nonzero parts lying in `V(r)`,
/// in lexicographic order of the left part.
pub fn v_splits(t: &ChainType) -> Result<Vec<VSplit>> {
    let mut out = Vec::new();
    for left in super::walls::rank_signatures(t) {
        let right: Vec<i64> = t.ranks.iter().zip(&left).map(|(r, l)| r - l).collect();
        if in_v_set(&dims(&left)?, &dims(&right)?, SPLIT_DECOMPOSITION_CAP)?.is_none() {
            continue;
        }
        let shared = (0..t.len()).any(|j| left[j] > 0 && right[j] > 0);
        let forced = (!shared).then(|| (0..t.len()).filter(|&j| left[j] > 0).map(|j| t.degrees[j]).sum());
        out.push(VSplit { left, right, forced_left_degree: forced });
    }
    Ok(out)
}

/// `Σ_{j≥1} α_j (R'' r'_j − R' r''_j) = R' d − R D'`.
pub fn split_functional(t: &ChainType, left: &[i64], right: &[i64], left_degree: i64) -> AffineFunctional {
    let (rl, rr): (i64, i64) = (left.iter().sum(), right.iter().sum());
    let coefficients = (1..t.len()).map(|j| int(rr * left[j] - rl * right[j])).collect();
    AffineFunctional::new(coefficients, int(rl * t.total_degree() - t.total_rank() * left_degree))
}

/// Degrees realizing a left total `left_degree`: unshared slots keep their
/// degree, the remainder goes to the first shared slot.
pub fn witness_split(t: &ChainType, s: &VSplit, left_degree: i64) -> Result<TypeSplit> {
    let n = t.len();
    let mut ld = vec![0i64; n];
    for j in 0..n {
        if s.left[j] > 0 && s.right[j] == 0 {
            ld[j] = t.degrees[j];
        }
    }
    let rest = left_degree - ld.iter().sum::<i64>();
    match (0..n).find(|&j| s.left[j] > 0 && s.right[j] > 0) {
        Some(j) => ld[j] += rest,
        None if rest != 0 => return Err(Error::invalid("left degree differs from the forced value")),
        None => {}
    }
    let left = ChainType::new(s.left.clone(), ld.clone())?;
    let right = ChainType::new(s.right.clone(), (0..n).map(|j| t.degrees[j] - ld[j]).collect())?;
    TypeSplit::new(t, left, right)
}

/// Every boundary hyperplane meeting the closed box, deduplicated by
/// canonical form, each with the split that produced it first.
pub fn birationality_boundary(t: &ChainType, bx: &ParamBox) -> Result<Vec<BoundaryHyperplane>> {
    let n = t.n();
    if n != 1 && n != 2 {
        return Err(Error::precondition("two-parameter-enumeration", format!("n = {n}")));
    }
    if bx.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: bx.dim() });
    }
    let (r, d) = (t.total_rank(), t.total_degree());
    let mut out: Vec<BoundaryHyperplane> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for s in v_splits(t)? {
        let base = split_functional(t, &s.left, &s.right, 0);
        if base.is_degenerate() {
            continue;
        }
        let candidates: Vec<i64> = match s.forced_left_degree {
            Some(dl) => vec![dl],
            None => {
                // The constant R'd − R D' must lie in the range of the linear part.
                let (lo, hi) = bx.linear_range(&base.coefficients);
                let rl = int(s.left.iter().sum::<i64>() * d);
                let from: i64 = ((&rl - hi) / int(r)).ceil().to_integer().try_into().expect("fits");
                let to: i64 = ((rl - lo) / int(r)).floor().to_integer().try_into().expect("fits");
                (from..=to).collect()
            }
        };
        for dl in candidates {
            let f = split_functional(t, &s.left, &s.right, dl);
            if !bx.line_meets_closed(&f) {
                continue;
            }
            let canon = f.canonical();
            if seen.insert(canon.clone()) {
                out.push(BoundaryHyperplane { functional: canon, split: witness_split(t, &s, dl)? });
            }
        }
    }
    Ok(out)
}

/// Whether `α` lies on some boundary hyperplane of `t`: some split in `V(r)`
/// admits an integral left degree `D' = (R'd − Σ c_j α_j)/R` compatible with
/// its forced degree.
pub fn on_birationality_boundary(t: &ChainType, alpha: &[Rational]) -> Result<bool> {
    for s in v_splits(t)? {
        let rl: i64 = s.left.iter().sum();
        let mut linear_part = split_functional(t, &s.left, &s.right, 0);
        linear_part.constant = int(0);
        let linear = linear_part.evaluate(alpha)?;
        let dl = (int(rl * t.total_degree()) - linear) / int(t.total_rank());
        if !dl.is_integer() {
            continue;
        }
        match s.forced_left_degree {
            None => return Ok(true),
            Some(f) if int(f) == dl => return Ok(true),
            _ => {}
        }
    }
    Ok(false)
}

/// `α_m = d_0/r_0 − d_1/r_1` for a two-slot type.
pub fn alpha_min(t: &ChainType) -> Result<Rational> {
    two_slot(t)?;
    Ok(Rational::new(t.degrees[0].into(), t.ranks[0].into()) - Rational::new(t.degrees[1].into(), t.ranks[1].into()))
}

/// `α_M = (1 + (r_0+r_1)/|r_0−r_1|)·α_m`, or `None` (infinite) when `r_0 = r_1`.
pub fn alpha_max(t: &ChainType) -> Result<Option<Rational>> {
    let am = alpha_min(t)?;
    let (r0, r1) = (t.ranks[0], t.ranks[1]);
    if r0 == r1 {
        return Ok(None);
    }
    Ok(Some(am * (int(1) + Rational::new((r0 + r1).into(), (r0 - r1).abs().into()))))
}

fn two_slot(t: &ChainType) -> Result<()> {
    if t.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: t.len() });
    }
    if !t.all_ranks_positive() {
        return Err(Error::precondition("all-ranks-positive", format!("{t}")));
    }
    Ok(())
}

/// Boundary points of a two-slot type inside `bx`, sorted.
pub fn boundary_points(t: &ChainType, bx: &ParamBox) -> Result<Vec<Rational>> {
    two_slot(t)?;
    let mut pts: Vec<Rational> = birationality_boundary(t, bx)?
        .iter()
        .map(|b| &b.functional.constant / &b.functional.coefficients[0])
        .collect();
    pts.sort();
    Ok(pts)
}

/// The open interval between consecutive boundary points that contains
/// the midpoint of `(α_m, α_M)`; `None` ends are unbounded within `bx`.
pub fn component_of_midpoint(t: &ChainType, bx: &ParamBox) -> Result<(Option<Rational>, Option<Rational>)> {
    let am = alpha_min(t)?;
    let probe = match alpha_max(t)? {
        Some(top) => (&am + top) / int(2),
        None => &am + int(1) / int(2),
    };
    let pts = boundary_points(t, bx)?;
    let lower = pts.iter().filter(|p| **p < probe).max().cloned();
    let upper = pts.iter().filter(|p| **p > probe).min().cloned();
    Ok((lower, upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    #[test]
    fn line_bundle_pair_boundary() {
        let t = ChainType::of(&[1, 1], &[1, 0]);
        let bx = ParamBox::cube(1, 0, 5).unwrap();
        let pts = boundary_points(&t, &bx).unwrap();
        assert_eq!(pts, vec![int(1)]);
        assert!(on_birationality_boundary(&t, &[int(1)]).unwrap());
        assert!(!on_birationality_boundary(&t, &[int(3)]).unwrap());
    }

    #[test]
    fn rank_two_over_one_bounds() {
        let t = ChainType::of(&[2, 1], &[5, 1]);
        assert_eq!(alpha_min(&t).unwrap(), rat(3, 2));
        assert_eq!(alpha_max(&t).unwrap(), Some(rat(3, 2) * int(4)));
        let t = ChainType::of(&[2, 2], &[5, 1]);
        assert_eq!(alpha_max(&t).unwrap(), None);
    }

    #[test]
    fn witnesses_sum_to_parent() {
        let t = ChainType::of(&[1, 1, 1], &[2, 1, 0]);
        let bx = ParamBox::cube(2, -5, 5).unwrap();
        for b in birationality_boundary(&t, &bx).unwrap() {
            assert_eq!(b.split.parent(), t);
            let f = split_functional(&t, &b.split.left.ranks, &b.split.right.ranks, b.split.left.total_degree());
            assert!(f.same_line(&b.functional));
        }
    }
}
