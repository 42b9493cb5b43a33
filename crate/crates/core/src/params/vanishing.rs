//! Vanishing predicates for the hypercohomology of the Hom complex, and
//! dimension bounds for flip loci.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;
use serde::Serialize;

use crate::chain::{chi_holomorphic, ChainType, StabilityParameter};
use crate::error::{Error, Result};
use crate::geometry::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "requires", rename_all = "kebab-case")]
pub enum Verdict {
    Guaranteed,
    /// Holds provided the listed caller assertions hold.
    Conditional(Vec<String>),
    NotGuaranteed,
}

impl Verdict {
    pub fn is_guaranteed(&self) -> bool {
        matches!(self, Verdict::Guaranteed)
    }
}

/// Slope data for the pair `(C', C'')` used by the `h⁰` test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlopeData {
    pub slope_sub: Rational,
    pub slope_quotient: Rational,
    pub both_semistable: bool,
    /// One of the two is stable and they are not isomorphic.
    pub stable_and_distinct: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingFlags {
    pub h2_vanishes: Verdict,
    pub h0_vanishes: Verdict,
}

/// Indices in `D` relax the gap condition `α_i − α_{i−1} > 2g−2` to `≥`
/// at the cost of asserting `(α + ε_i u_i)`-stability. `D = ∅` and
/// `D = {1..n}` with `ε = 0` are the two common specializations.
pub fn vanishing_flags(
    alpha: &StabilityParameter,
    g: i64,
    d_set: &BTreeSet<usize>,
    epsilon: &BTreeMap<usize, Rational>,
    stability_asserted: &BTreeMap<usize, bool>,
    slopes: Option<&SlopeData>,
) -> Result<VanishingFlags> {
    let n = alpha.n();
    if g < 0 {
        return Err(Error::invalid("genus must be nonnegative"));
    }
    if let Some(&i) = d_set.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::invalid(format!("index {i} is outside 1..={n}")));
    }
    for &i in d_set {
        match epsilon.get(&i) {
            None => return Err(Error::invalid(format!("missing ε for index {i}"))),
            Some(e) if e.is_negative() => return Err(Error::invalid(format!("ε_{i} is negative"))),
            _ => {}
        }
    }
    let a = alpha.values();
    let bound = int(2 * g - 2);
    let mut pending = Vec::new();
    let mut h2 = Verdict::Guaranteed;
    for i in 1..=n {
        let gap = &a[i] - &a[i - 1];
        if d_set.contains(&i) {
            if gap < bound {
                h2 = Verdict::NotGuaranteed;
                break;
            }
            if !stability_asserted.get(&i).copied().unwrap_or(false) {
                pending.push(format!("(α + ε_{i}·u_{i})-stability, ε_{i} = {}", epsilon[&i]));
            }
        } else if gap <= bound {
            h2 = Verdict::NotGuaranteed;
            break;
        }
    }
    if h2 == Verdict::Guaranteed && !pending.is_empty() {
        h2 = Verdict::Conditional(pending);
    }
    Ok(VanishingFlags { h2_vanishes: h2, h0_vanishes: h0_verdict(slopes) })
}

/// `Hom(C'', C') = 0` when both are α-semistable and `μ(C') < μ(C'')`, or
/// the slopes agree, one is α-stable and they are not isomorphic.
pub fn h0_verdict(slopes: Option<&SlopeData>) -> Verdict {
    let Some(s) = slopes else {
        return Verdict::Conditional(vec![
            "both α-semistable with μ(C') < μ(C''), or equal slopes with one α-stable and C' ≇ C''".into(),
        ]);
    };
    if !s.both_semistable {
        return Verdict::NotGuaranteed;
    }
    if s.slope_sub < s.slope_quotient || (s.slope_sub == s.slope_quotient && s.stable_and_distinct) {
        Verdict::Guaranteed
    } else {
        Verdict::NotGuaranteed
    }
}

/// Types of the graded pieces `t_1, …, t_m` of a Jordan–Hölder filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipFiltration {
    pub types: Vec<ChainType>,
}

impl FlipFiltration {
    pub fn new(types: Vec<ChainType>) -> Result<Self> {
        if types.len() < 2 {
            return Err(Error::invalid(format!("a filtration needs m ≥ 2 pieces, got {}", types.len())));
        }
        let len = types[0].len();
        if let Some(t) = types.iter().find(|t| t.len() != len) {
            return Err(Error::DimensionMismatch { expected: len, got: t.len() });
        }
        Ok(Self { types })
    }

    pub fn m(&self) -> usize {
        self.types.len()
    }

    pub fn parent(&self) -> Result<ChainType> {
        let mut acc = self.types[0].clone();
        for t in &self.types[1..] {
            acc = acc.checked_add(t)?;
        }
        Ok(acc)
    }

    /// Checks the pieces against an expected parent type.
    pub fn check_parent(&self, parent: &ChainType) -> Result<()> {
        if &self.parent()? != parent {
            return Err(Error::invalid(format!("pieces do not sum to {parent}")));
        }
        Ok(())
    }
}

/// `−Σ_{i≤j} χ(t_j, t_i) − m(m−3)/2`.
pub fn flip_dim_bound(f: &FlipFiltration, g: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::precondition("genus-at-least-2", format!("g = {g}")));
    }
    let m = f.m() as i64;
    let mut sum = 0;
    for j in 0..f.types.len() {
        for i in 0..=j {
            sum += chi_holomorphic(&f.types[j], &f.types[i], g)?;
        }
    }
    Ok(-sum - m * (m - 3) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodimBound {
    pub value: i64,
    pub minimizing_m: i64,
}

/// One term of the codimension lower bound for a filtration of length `m`.
pub fn codim_term(m: i64, g: i64) -> i64 {
    m * (m - 1) / 2 * (g - 1) + (m * (m - 3) + 2) / 2
}

/// Minimum of [`codim_term`] over `m ≥ 2`. The terms increase in `m` for
/// `g ≥ 2`, so the search stops at the first increase.
pub fn flip_codim_lower_bound(g: i64) -> Result<CodimBound> {
    if g < 2 {
        return Err(Error::precondition("genus-at-least-2", format!("g = {g}")));
    }
    let mut best = CodimBound { value: codim_term(2, g), minimizing_m: 2 };
    let mut m = 3;
    loop {
        let v = codim_term(m, g);
        if v < best.value {
            best = CodimBound { value: v, minimizing_m: m };
        } else if v > codim_term(m - 1, g) {
            break;
        }
        m += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn strict_gaps() {
        let a = StabilityParameter::from_free_ints(&[3, 6]);
        let v = vanishing_flags(&a, 2, &set(&[]), &BTreeMap::new(), &BTreeMap::new(), None).unwrap();
        assert_eq!(v.h2_vanishes, Verdict::Guaranteed);
        let a = StabilityParameter::from_free_ints(&[1, 2]);
        let v = vanishing_flags(&a, 2, &set(&[]), &BTreeMap::new(), &BTreeMap::new(), None).unwrap();
        assert_eq!(v.h2_vanishes, Verdict::NotGuaranteed);
    }

    #[test]
    fn relaxed_gaps() {
        let a = StabilityParameter::from_free_ints(&[2, 4]);
        let eps: BTreeMap<usize, Rational> = [(1, int(0)), (2, int(0))].into();
        let yes: BTreeMap<usize, bool> = [(1, true), (2, true)].into();
        let v = vanishing_flags(&a, 2, &set(&[1, 2]), &eps, &yes, None).unwrap();
        assert_eq!(v.h2_vanishes, Verdict::Guaranteed);
        let v = vanishing_flags(&a, 2, &set(&[1, 2]), &eps, &BTreeMap::new(), None).unwrap();
        assert!(matches!(v.h2_vanishes, Verdict::Conditional(ref r) if r.len() == 2));
        assert!(vanishing_flags(&a, 2, &set(&[1]), &BTreeMap::new(), &yes, None).is_err());
    }

    #[test]
    fn h0_cases() {
        let s = SlopeData { slope_sub: int(1), slope_quotient: int(2), both_semistable: true, stable_and_distinct: false };
        assert_eq!(h0_verdict(Some(&s)), Verdict::Guaranteed);
        let s = SlopeData { slope_sub: int(2), ..s };
        assert_eq!(h0_verdict(Some(&s)), Verdict::NotGuaranteed);
        let s = SlopeData { stable_and_distinct: true, ..s };
        assert_eq!(h0_verdict(Some(&s)), Verdict::Guaranteed);
    }

    #[test]
    fn codim_bound_small_genus() {
        assert_eq!(flip_codim_lower_bound(2).unwrap(), CodimBound { value: 1, minimizing_m: 2 });
        assert_eq!(flip_codim_lower_bound(5).unwrap().value, 4);
        assert_eq!(codim_term(3, 2), 4);
    }

    #[test]
    fn dim_bound_two_pieces() {
        let t = ChainType::of(&[1, 1, 1], &[0, 0, 0]);
        assert_eq!(chi_holomorphic(&t, &t, 2).unwrap(), -1);
        let f = FlipFiltration::new(vec![t.clone(), t]).unwrap();
        assert_eq!(flip_dim_bound(&f, 2).unwrap(), 4);
    }
}
