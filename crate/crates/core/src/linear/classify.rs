//! Parameters admitting semistable linear chains of length three, by rank
//! pattern. Patterns with `r_0 < r_1 < r_2` and `r_0 = r_1 ≠ r_2` are the
//! duals of the first and third patterns.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::interval::DimensionVector;
use super::oracle::{oracle_exists_semistable, EXISTENCE_CAP};
use crate::chain::StabilityParameter;
use crate::error::{Error, Result};
use crate::geometry::rational::{int, Rational};

/// The set of `(α_1, α_2)` for which semistable chains exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemistableSet {
    Origin,
    /// `{λ·dir : λ ≥ 0}`.
    Ray { dir: (i64, i64) },
    /// `α_1 ≤ 2α_2` and `α_1 + α_2 ≥ 0`.
    Cone,
}

impl SemistableSet {
    pub fn contains(&self, a1: &Rational, a2: &Rational) -> bool {
        match self {
            SemistableSet::Origin => a1.is_zero() && a2.is_zero(),
            SemistableSet::Ray { dir: (x, y) } => {
                let cross = a1 * int(*y) - a2 * int(*x);
                let dot = a1 * int(*x) + a2 * int(*y);
                cross.is_zero() && !dot.is_negative()
            }
            SemistableSet::Cone => *a1 <= a2 * int(2) && !(a1 + a2).is_negative(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SemistableSet::Origin => "{(0,0)}".into(),
            SemistableSet::Ray { dir: (x, y) } => format!("{{λ·({x},{y}) : λ ≥ 0}}"),
            SemistableSet::Cone => "{α1 ≤ 2·α2, α1 + α2 ≥ 0}".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub case: String,
    pub set: SemistableSet,
    pub map_requirement: String,
}

pub fn classify_linear_3chain_parameters(r: &DimensionVector) -> Result<Classification> {
    if r.dims.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: r.dims.len() });
    }
    let (r0, r1, r2) = (r.dims[0], r.dims[1], r.dims[2]);
    if r0 == 0 || r1 == 0 || r2 == 0 {
        return Err(Error::precondition("all-ranks-positive", format!("ranks {r}")));
    }
    let c = |case: &str, set, req: &str| Classification { case: case.into(), set, map_requirement: req.into() };
    Ok(if r0 == r1 && r1 == r2 {
        c(
            "iv",
            SemistableSet::Cone,
            "f_2 iso on the ray λ(-1,1); f_1 iso on the ray λ(2,1); f_1 and f_2 iso in the interior",
        )
    } else if r1 == r2 {
        c("iii", SemistableSet::Ray { dir: (-1, 1) }, "f_2 iso")
    } else if r0 == r1 {
        c("dual-iii", SemistableSet::Ray { dir: (2, 1) }, "f_1 iso")
    } else if r0 > r1 {
        c("i", SemistableSet::Origin, "none")
    } else if r1 > r2 {
        if r0 == r2 {
            c("ii", SemistableSet::Ray { dir: (1, 2) }, "f_1∘f_2 iso off the origin")
        } else {
            c("ii", SemistableSet::Origin, "none")
        }
    } else {
        c("dual-i", SemistableSet::Origin, "none")
    })
}

/// Whether `γ`-semistable linear chains of dimension vector `r` exist.
pub fn ray_asymptotic_semistable(r: &DimensionVector, gamma: &StabilityParameter) -> Result<bool> {
    if gamma.values().len() != r.dims.len() {
        return Err(Error::DimensionMismatch { expected: r.dims.len(), got: gamma.values().len() });
    }
    if gamma.values().iter().all(Zero::is_zero) {
        return Ok(true);
    }
    if r.dims.len() == 3 && r.dims.iter().all(|&d| d > 0) {
        let cls = classify_linear_3chain_parameters(r)?;
        let v = gamma.values();
        return Ok(cls.set.contains(&v[1], &v[2]));
    }
    if r.total() > EXISTENCE_CAP {
        return Err(Error::CapExceeded { what: "total dimension".into(), value: r.total(), cap: EXISTENCE_CAP });
    }
    oracle_exists_semistable(r, gamma, 2, false)
}
