//! The rank patterns `(m,1,n)` and `(1,m,1)`: their inequality systems,
//! and the moduli data attached to the extremal chamber.

use serde::{Deserialize, Serialize};

use crate::chain::{moduli_dimension, ChainType, ProblemInstance};
use crate::error::{Error, Result};
use crate::geometry::functional::Sense;
use crate::geometry::rational::{int, rat, Rational};

use super::region::{LabeledHalfspace, RegionReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternRegion {
    pub report: RegionReport,
    /// Right-hand sides `A_I, A_II, A_III` and, when present, `A_IV`.
    pub constants: Vec<(String, Rational)>,
    pub interior_nonempty: bool,
}

impl PatternRegion {
    pub fn constant(&self, name: &str) -> Option<&Rational> {
        self.constants.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

fn pattern_m1n(t: &ChainType) -> Result<(i64, i64, [i64; 3])> {
    if t.len() != 3 || t.ranks[1] != 1 || t.ranks[0] < 2 || t.ranks[2] < 1 {
        return Err(Error::precondition("rank-pattern-m1n", format!("{t} is not of the form (m,1,n) with m ≥ 2")));
    }
    Ok((t.ranks[0], t.ranks[2], [t.degrees[0], t.degrees[1], t.degrees[2]]))
}

fn pattern_1m1(t: &ChainType) -> Result<(i64, [i64; 3])> {
    if t.len() != 3 || t.ranks[0] != 1 || t.ranks[2] != 1 || t.ranks[1] < 2 {
        return Err(Error::precondition("rank-pattern-1m1", format!("{t} is not of the form (1,m,1) with m ≥ 2")));
    }
    Ok((t.ranks[1], [t.degrees[0], t.degrees[1], t.degrees[2]]))
}

/// Inequalities I–IV for `(m,1,n)`; IV only when `n > 1`.
pub fn region_m1n(t: &ChainType) -> Result<PatternRegion> {
    let (m, n, [d0, d1, d2]) = pattern_m1n(t)?;
    let a1 = (n + 2) * d0 - (2 * m + n) * d1 + (1 - m) * d2;
    let a2 = (n + 1) * d0 - m * d1 - m * d2;
    let a3 = n * d0 + n * d1 - (m + 1) * d2;
    let mut hs = vec![
        LabeledHalfspace::ints("I:image-of-phi1", &[m - 1, (m - 1) * n], Sense::Le, int(a1))?,
        LabeledHalfspace::ints("II:first-slot", &[m, m * n], Sense::Ge, int(a2))?,
        LabeledHalfspace::ints("III:first-two-slots", &[-n, (m + 1) * n], Sense::Ge, int(a3))?,
    ];
    let mut constants = vec![("A_I".to_string(), int(a1)), ("A_II".into(), int(a2)), ("A_III".into(), int(a3))];
    // Strips I/II and III/IV are non-empty exactly when their bounds are ordered.
    let mut interior = m * a1 > (m - 1) * a2;
    if n > 1 {
        let a4 = (n - 1) * d0 + (m + 2 * n) * d1 - (m + 2) * d2;
        hs.push(LabeledHalfspace::ints("IV:kernel-of-phi2", &[-(n - 1), (m + 1) * (n - 1)], Sense::Le, int(a4))?);
        constants.push(("A_IV".into(), int(a4)));
        interior &= n * a4 > (n - 1) * a3;
    }
    Ok(PatternRegion { report: RegionReport::new(hs), constants, interior_nonempty: interior })
}

/// Inequalities I–IV for `(1,m,1)`, with the two composite-map lines as
/// annotations.
pub fn region_1m1(t: &ChainType) -> Result<PatternRegion> {
    let (m, [d0, d1, d2]) = pattern_1m1(t)?;
    let a1 = int((m + 1) * d0 - d1 - d2);
    let a2 = int(d0 + d1 - (m + 1) * d2);
    let a3 = int(-d0) + rat(3 * d1, m - 1) - rat((2 * m + 1) * d2, m - 1);
    let a4 = -rat((2 * m + 1) * d0, m - 1) + rat(3 * d1, m - 1) - int(d2);
    let hs = vec![
        LabeledHalfspace::ints("I:first-slot", &[m, 1], Sense::Ge, a1.clone())?,
        LabeledHalfspace::ints("II:first-two-slots", &[-m, m + 1], Sense::Ge, a2.clone())?,
        LabeledHalfspace::ints("III:image-of-phi2", &[-2, 1], Sense::Le, a3.clone())?,
        LabeledHalfspace::ints("IV:kernel-of-phi1", &[-2, 1], Sense::Ge, a4.clone())?,
    ];
    let interior = a3 > a4;
    let mut report = RegionReport::new(hs);
    report.annotations = vec![
        LabeledHalfspace::ints("VI:composite-zero-kernel", &[m - 2, 2], Sense::Le, int(2 * (m + 1) * d0 - 2 * d1 - 2 * d2))?,
        LabeledHalfspace::ints("V:composite-zero-image", &[2 - m, m], Sense::Le, int(2 * d0 + 2 * d1 - 2 * (m + 1) * d2))?,
    ];
    let constants = vec![("A_I".into(), a1), ("A_II".into(), a2), ("A_III".into(), a3), ("A_IV".into(), a4)];
    Ok(PatternRegion { report, constants, interior_nonempty: interior })
}

/// Closed-form moduli dimensions for the special patterns, without
/// checking non-emptiness.
pub fn pattern_dimension(t: &ChainType, g: i64) -> Option<i64> {
    if t.len() != 3 {
        return None;
    }
    let (r, d) = (&t.ranks, &t.degrees);
    if r[1] == 1 && r[0] >= 2 && r[2] == 1 {
        let m = r[0];
        Some(d[0] - (m - 1) * d[1] - d[2] + (m - 1) * m * (g - 1) + g)
    } else if r[1] == 1 && r[0] >= 2 && r[2] > 1 {
        let (m, n) = (r[0], r[2]);
        Some((g - 1) * (m * m + 1 + n * n - m - n) + (d[0] - m * d[1]) + (n * d[1] - d[2]) + 1)
    } else if r[0] == 1 && r[2] == 1 && r[1] >= 2 {
        let m = r[1];
        Some((m - 1) * (m - 1) * (g - 1) + g + m * (d[0] - d[2]))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSummary {
    pub pattern: String,
    pub dimension: i64,
    pub general_dimension: i64,
    /// Fibre dimension `N` of the projective bundle, where known.
    pub fiber_dimension: Option<i64>,
    pub base: Option<String>,
    pub b2: Option<i64>,
}

fn require(ok: bool, label: &str, detail: String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(label, detail))
    }
}

/// Moduli data for parameters in the extremal chamber.
pub fn extremal_summary(inst: &ProblemInstance) -> Result<ExtremalSummary> {
    let t = &inst.chain_type;
    let g = inst.genus;
    let general = moduli_dimension(inst)?;
    let dimension =
        pattern_dimension(t, g).ok_or_else(|| Error::precondition("special-rank-pattern", format!("{t} is not (m,1,n) or (1,m,1)")))?;
    if dimension != general {
        return Err(Error::invalid(format!("pattern dimension {dimension} differs from {general}")));
    }
    let (r, d) = (&t.ranks, &t.degrees);
    if r[1] == 1 {
        let (m, n) = (r[0], r[2]);
        require(d[0] > m * d[1], "interior-d0-gt-m-d1", format!("d0 = {} ≤ m·d1 = {}", d[0], m * d[1]))?;
        if n == 1 {
            Ok(ExtremalSummary {
                pattern: "m11".into(),
                dimension,
                general_dimension: general,
                fiber_dimension: Some(d[0] - m * d[1] + (m - 1) * (g - 1) - 1),
                base: Some(format!("J^{} × X^({}) × U^s({}, {})", d[1], d[1] - d[2], m - 1, d[0] - d[1])),
                b2: None,
            })
        } else {
            let b2 = n * d[1] - d[2] + (n - 1) * (2 * g - 2);
            require(b2 > 0, "b2-positive", format!("b2 = {b2}"))?;
            Ok(ExtremalSummary {
                pattern: "m1n".into(),
                dimension,
                general_dimension: general,
                fiber_dimension: None,
                base: None,
                b2: Some(b2),
            })
        }
    } else {
        let m = r[1];
        require(d[0] > d[2], "interior-d0-gt-d2", format!("d0 = {} ≤ d2 = {}", d[0], d[2]))?;
        Ok(ExtremalSummary {
            pattern: "1m1".into(),
            dimension,
            general_dimension: general,
            fiber_dimension: Some((m - 1) * (d[0] - d[2]) - 1),
            base: Some(format!("J^{} × X^({}) × U^s({}, {})", d[2], d[0] - d[2], m - 1, d[1] - d[2])),
            b2: None,
        })
    }
}

/// Dimension of the family of non-split extensions of a `(1,1,1)` chain
/// with first degree `d0_quotient` by a rank `m−1` bundle, for type
/// `(m,1,1)`, together with its codimension in the moduli space.
pub fn m11_flip_locus(inst: &ProblemInstance, d0_quotient: i64) -> Result<(i64, i64)> {
    let t = &inst.chain_type;
    let g = inst.genus;
    pattern_m1n(t)?;
    if t.ranks[2] != 1 {
        return Err(Error::precondition("rank-pattern-m11", format!("{t}")));
    }
    let (m, d) = (t.ranks[0], &t.degrees);
    require(m * d0_quotient < d[0], "wall-in-interior", format!("m·d0'' = {} ≥ d0 = {}", m * d0_quotient, d[0]))?;
    let locus = (m - 1) * (m - 1) * (g - 1) + g + m * d0_quotient + (1 - m) * d[1] - d[2];
    Ok((locus, moduli_dimension(inst)? - locus))
}
