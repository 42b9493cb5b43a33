//! Inequality systems for three-slot chains whose maps have generically
//! maximal rank, kernel-rank builders, and the unbounded-region families.

use serde::{Deserialize, Serialize};

use crate::chain::ChainType;
use crate::error::{Error, Result};
use crate::geometry::functional::{AffineFunctional, Halfspace, Sense};
use crate::geometry::rational::{int, rat, Rational};

use super::region::{LabeledHalfspace, RegionReport};

/// Caller-asserted behaviour of the maps `φ_1 : E_1 → E_0`, `φ_2 : E_2 → E_1`
/// and the composite `φ_1∘φ_2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFlags {
    pub phi1_injective: bool,
    pub phi1_gen_surjective: bool,
    pub phi2_injective: bool,
    pub phi2_gen_surjective: bool,
    pub composite_gen_surjective: bool,
}

pub const LOWER_0: &str = "standard-subchain-0";
pub const LOWER_1: &str = "standard-subchain-1";
pub const PHI1_INJECTIVE: &str = "phi1-injective";
pub const PHI2_GEN_SURJECTIVE: &str = "phi2-generically-surjective";
pub const PHI2_INJECTIVE: &str = "phi2-injective";
pub const PHI1_GEN_SURJECTIVE: &str = "phi1-generically-surjective";
pub const COMPOSITE_GEN_SURJECTIVE: &str = "composite-generically-surjective";
pub const COMPOSITE_PLUS_PHI2: &str = "composite-plus-phi2-injective";

fn three(t: &ChainType) -> Result<([i64; 3], [i64; 3])> {
    if t.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: t.len() });
    }
    if !t.all_ranks_positive() {
        return Err(Error::precondition("all-ranks-positive", format!("{t}")));
    }
    Ok(([t.ranks[0], t.ranks[1], t.ranks[2]], [t.degrees[0], t.degrees[1], t.degrees[2]]))
}

fn lhs(label: &str, c: [Rational; 2], sense: Sense, rhs: Rational) -> Result<LabeledHalfspace> {
    Ok(LabeledHalfspace::new(label, Halfspace::from_lhs_rhs(c.to_vec(), sense, rhs)?))
}

fn q(a: i64, b: i64) -> Rational {
    rat(a, b)
}

/// `α_1 r_1 + α_2 r_2 ≥ ((r_1+r_2)/r_0) d_0 − d_1 − d_2`.
pub fn lower_0(r: [i64; 3], d: [i64; 3]) -> Result<LabeledHalfspace> {
    lhs(LOWER_0, [int(r[1]), int(r[2])], Sense::Ge, q((r[1] + r[2]) * d[0], r[0]) - int(d[1] + d[2]))
}

/// `−α_1 r_1 + α_2 (r_0+r_1) ≥ d_0 + d_1 − ((r_0+r_1)/r_2) d_2`.
pub fn lower_1(r: [i64; 3], d: [i64; 3]) -> Result<LabeledHalfspace> {
    lhs(LOWER_1, [int(-r[1]), int(r[0] + r[1])], Sense::Ge, int(d[0] + d[1]) - q((r[0] + r[1]) * d[2], r[2]))
}

fn check_flags(r: [i64; 3], f: &MapFlags) -> Result<()> {
    let bad = |flag: &str, need: &str| Err(Error::precondition("map-flag-consistency", format!("{flag} needs {need}")));
    if f.phi1_injective && r[1] > r[0] {
        return bad("phi1_injective", "r_1 ≤ r_0");
    }
    if f.phi1_gen_surjective && r[1] < r[0] {
        return bad("phi1_gen_surjective", "r_1 ≥ r_0");
    }
    if f.phi2_injective && r[2] > r[1] {
        return bad("phi2_injective", "r_2 ≤ r_1");
    }
    if f.phi2_gen_surjective && r[2] < r[1] {
        return bad("phi2_gen_surjective", "r_2 ≥ r_1");
    }
    if f.composite_gen_surjective && r[2] < r[0] {
        return bad("composite_gen_surjective", "r_2 ≥ r_0");
    }
    Ok(())
}

/// The region cut out by the two unconditional inequalities and every
/// conditional one whose rank comparison and map flag apply.
///
/// When `r_0 < r_1 > r_2`, `r_0 < r_2` and the composite is generically
/// surjective, `φ_2` is injective and `φ_1` generically surjective as well,
/// and the sum of the corresponding inequalities is added.
pub fn rank_maximal_region(t: &ChainType, flags: &MapFlags) -> Result<RegionReport> {
    let (r, d) = three(t)?;
    check_flags(r, flags)?;
    let mut f = *flags;
    let parallelogram = r[0] < r[1] && r[1] > r[2] && r[0] < r[2] && f.composite_gen_surjective;
    if parallelogram {
        f.phi2_injective = true;
        f.phi1_gen_surjective = true;
    }
    let mut hs = vec![lower_0(r, d)?, lower_1(r, d)?];
    if r[0] > r[1] && f.phi1_injective {
        let k = r[0] - r[1];
        let rhs = q((2 * r[1] + r[2]) * d[0], k) - q((2 * r[0] + r[2]) * d[1], k) - int(d[2]);
        hs.push(lhs(PHI1_INJECTIVE, [int(r[1]), int(r[2])], Sense::Le, rhs)?);
    }
    if r[1] < r[2] && f.phi2_gen_surjective {
        let k = r[2] - r[1];
        let rhs = int(d[0]) + q((r[0] + 2 * r[2]) * d[1], k) - q((r[0] + 2 * r[1]) * d[2], k);
        hs.push(lhs(PHI2_GEN_SURJECTIVE, [int(-r[1]), int(r[0] + r[1])], Sense::Le, rhs)?);
    }
    if r[1] > r[2] && f.phi2_injective {
        hs.push(phi2_injective(r, d)?);
    }
    if r[0] < r[1] && f.phi1_gen_surjective {
        hs.push(phi1_gen_surjective(r, d)?);
    }
    if parallelogram {
        let composite = composite_gen_surjective(r, d)?;
        let sum = hs
            .iter()
            .find(|h| h.label == PHI2_INJECTIVE)
            .expect("emitted above")
            .halfspace
            .functional
            .add(&composite.halfspace.functional);
        hs.push(composite);
        hs.push(LabeledHalfspace::new(COMPOSITE_PLUS_PHI2, Halfspace::new(sum, Sense::Le)?));
    }
    Ok(RegionReport::new(hs))
}

fn phi2_injective(r: [i64; 3], d: [i64; 3]) -> Result<LabeledHalfspace> {
    let k = r[1] - r[2];
    let rhs = int(-d[0]) + q((r[0] + 2 * r[2]) * d[1], k) - q((r[0] + 2 * r[1]) * d[2], k);
    lhs(PHI2_INJECTIVE, [int(-(r[0] + r[2])), int(r[2])], Sense::Le, rhs)
}

fn phi1_gen_surjective(r: [i64; 3], d: [i64; 3]) -> Result<LabeledHalfspace> {
    let k = r[1] - r[0];
    let rhs = q((2 * r[1] + r[2]) * d[0], k) - q((2 * r[0] + r[2]) * d[1], k) + int(d[2]);
    lhs(PHI1_GEN_SURJECTIVE, [int(r[0] + r[2]), int(-r[2])], Sense::Le, rhs)
}

fn composite_gen_surjective(r: [i64; 3], d: [i64; 3]) -> Result<LabeledHalfspace> {
    let k = r[2] - r[0];
    let rhs = q((-r[0] + r[1] + 3 * r[2]) * d[0], k) + int(2 * d[1]) - q((3 * r[0] + r[1] - r[2]) * d[2], k);
    lhs(COMPOSITE_GEN_SURJECTIVE, [int(r[0] - r[1] + r[2]), int(r[0] + r[1] - r[2])], Sense::Le, rhs)
}

/// Bound from a non-injective `φ_2` whose kernel has rank `kernel_rank`:
/// `α_2(r'_2 r + r_2 r − r_2(r_0+2r_2)) − α_1(r'_2 r − r_2 r + (r_0+2r_2) r_1) ≤ r K_6`.
pub fn kernel_phi2_bound(t: &ChainType, kernel_rank: i64) -> Result<LabeledHalfspace> {
    let (r, d) = three(t)?;
    if kernel_rank < 1 || kernel_rank > r[2] {
        return Err(Error::precondition("kernel-rank-range", format!("rank of ker φ_2 must lie in 1..={}", r[2])));
    }
    let total = r[0] + r[1] + r[2];
    let a1 = -(kernel_rank * total - r[2] * total + (r[0] + 2 * r[2]) * r[1]);
    let a2 = kernel_rank * total + r[2] * total - r[2] * (r[0] + 2 * r[2]);
    let rk6 = (r[2] - r[1]) * d[0] + (r[0] + 2 * r[2]) * d[1] - (r[0] + 2 * r[1]) * d[2];
    LabeledHalfspace::ints("phi2-kernel", &[a1, a2], Sense::Le, int(rk6))
}

/// Bound from a non-surjective `φ_1` whose dual kernel has rank `kernel_rank`:
/// `α_1(r'_0 r + (r_0+r_2)(r_1−r_0)) − α_2 r_2 (r_1−r_0) ≤ r K_8`.
pub fn kernel_phi1_dual_bound(t: &ChainType, kernel_rank: i64) -> Result<LabeledHalfspace> {
    let (r, d) = three(t)?;
    if kernel_rank < 1 || kernel_rank > r[0] {
        return Err(Error::precondition("kernel-rank-range", format!("rank of the dual kernel must lie in 1..={}", r[0])));
    }
    let total = r[0] + r[1] + r[2];
    let a1 = kernel_rank * total + (r[0] + r[2]) * (r[1] - r[0]);
    let a2 = -r[2] * (r[1] - r[0]);
    let rk8 = (r[2] + 2 * r[1]) * d[0] - (r[2] + 2 * r[0]) * d[1] - (r[0] - r[1]) * d[2];
    LabeledHalfspace::ints("phi1-dual-kernel", &[a1, a2], Sense::Le, int(rk8))
}

/// One member of a family of parameter regions indexed by which maps are
/// injective. Bounds whose constants are not effective are listed by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyRegion {
    pub name: String,
    pub condition: String,
    pub bounded: bool,
    pub region: RegionReport,
    /// Upper bounds whose right-hand side exists but is not computed,
    /// written as the functional `Σ c_i α_i` that is bounded above.
    pub unquantified_upper: Vec<AffineFunctional>,
}

/// Regions for the rank patterns whose parameter region may be unbounded:
/// `r_0 ≠ r_1 = r_2`, all ranks equal, and `r_0 < r_1 > r_2` with `r_0 = r_2`.
pub fn unbounded_families(t: &ChainType) -> Result<Vec<FamilyRegion>> {
    let (r, d) = three(t)?;
    let lower = || -> Result<Vec<LabeledHalfspace>> { Ok(vec![lower_0(r, d)?, lower_1(r, d)?]) };
    let bounded = |cond: &str| FamilyRegion {
        name: "R_0".into(),
        condition: cond.into(),
        bounded: true,
        region: RegionReport::default(),
        unquantified_upper: Vec::new(),
    };
    let family = |name: &str, cond: &str, hs: Vec<LabeledHalfspace>, upper: Vec<AffineFunctional>| FamilyRegion {
        name: name.into(),
        condition: cond.into(),
        bounded: false,
        region: RegionReport::new(hs),
        unquantified_upper: upper,
    };
    let weighted = AffineFunctional::from_ints(&[r[1], r[2]], 0);
    let second = AffineFunctional::from_ints(&[-r[1], r[0] + r[1]], 0);
    if r[0] == r[1] && r[1] == r[2] {
        Ok(vec![
            bounded("neither map injective"),
            family("R_1", "phi2 injective, phi1 not", lower()?, vec![weighted]),
            family("R_2", "phi1 injective, phi2 not", lower()?, vec![second]),
            family("R_3", "both maps injective", lower()?, Vec::new()),
        ])
    } else if r[1] == r[2] {
        Ok(vec![bounded("phi2 not injective"), family("R_1", "phi2 injective", lower()?, vec![weighted])])
    } else if r[0] < r[1] && r[1] > r[2] && r[0] == r[2] {
        let hs = vec![lower_0(r, d)?, phi2_injective(r, d)?, phi1_gen_surjective(r, d)?];
        Ok(vec![bounded("not rank maximal"), family("R_1", "rank maximal", hs, Vec::new())])
    } else {
        Err(Error::precondition(
            "unbounded-rank-pattern",
            format!("ranks {:?} fall under no unbounded family", r),
        ))
    }
}
