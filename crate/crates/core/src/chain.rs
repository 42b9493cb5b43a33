//! Chain types, α-slopes, duality, Euler characteristics, moduli dimensions
//! and the conversion between α and τ parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::rational::{int, Rational};
use num_traits::Zero;

/// Ranks and degrees `(r_0..r_n; d_0..d_n)` of a holomorphic chain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainType {
    pub ranks: Vec<i64>,
    pub degrees: Vec<i64>,
}

impl ChainType {
    pub fn new(ranks: Vec<i64>, degrees: Vec<i64>) -> Result<Self> {
        if ranks.len() != degrees.len() {
            return Err(Error::DimensionMismatch { expected: ranks.len(), got: degrees.len() });
        }
        if ranks.len() < 2 {
            return Err(Error::invalid("a chain needs at least two slots"));
        }
        if let Some(j) = ranks.iter().position(|&r| r < 0) {
            return Err(Error::invalid(format!("negative rank in slot {j}")));
        }
        if let Some(j) = (0..ranks.len()).find(|&j| ranks[j] == 0 && degrees[j] != 0) {
            return Err(Error::invalid(format!("slot {j} has rank 0 but degree {}", degrees[j])));
        }
        Ok(Self { ranks, degrees })
    }

    /// Shorthand for tests and examples; panics on invalid input.
    pub fn of(ranks: &[i64], degrees: &[i64]) -> Self {
        Self::new(ranks.to_vec(), degrees.to_vec()).expect("valid chain type")
    }

    /// Number of maps, so slots are `0..=n`.
    pub fn n(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn total_rank(&self) -> i64 {
        self.ranks.iter().sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn all_ranks_positive(&self) -> bool {
        self.ranks.iter().all(|&r| r > 0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Self::new(
            self.ranks.iter().zip(&other.ranks).map(|(a, b)| a + b).collect(),
            self.degrees.iter().zip(&other.degrees).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        same_len(self.len(), other.len())?;
        Self::new(
            self.ranks.iter().zip(&other.ranks).map(|(a, b)| a - b).collect(),
            self.degrees.iter().zip(&other.degrees).map(|(a, b)| a - b).collect(),
        )
    }
}

impl fmt::Display for ChainType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.ranks), join(&self.degrees))
    }
}

/// Accepts `r0,r1,..:d0,d1,..` or `(r0,r1,..;d0,d1,..)`.
impl FromStr for ChainType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (r, d) = t
            .split_once(';')
            .or_else(|| t.split_once(':'))
            .ok_or_else(|| Error::Parse(format!("expected ranks:degrees, got {s:?}")))?;
        Self::new(parse_ints(r)?, parse_ints(d)?)
    }
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: {x:?}"))))
        .collect()
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, got: b });
    }
    Ok(())
}

/// A chain type together with the genus of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub genus: i64,
    pub chain_type: ChainType,
}

impl ProblemInstance {
    pub fn new(genus: i64, chain_type: ChainType) -> Result<Self> {
        if genus < 2 {
            return Err(Error::invalid(format!("genus must be at least 2, got {genus}")));
        }
        Ok(Self { genus, chain_type })
    }
}

/// `(α_0, …, α_n)` with `α_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityParameter {
    values: Vec<Rational>,
}

impl StabilityParameter {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        match values.first() {
            None => Err(Error::invalid("empty parameter")),
            Some(a0) if !a0.is_zero() => Err(Error::invalid("α_0 must be 0")),
            _ => Ok(Self { values }),
        }
    }

    /// From the free coordinates `α_1..α_n`.
    pub fn from_free(free: &[Rational]) -> Self {
        let mut values = vec![Rational::zero()];
        values.extend_from_slice(free);
        Self { values }
    }

    pub fn from_free_ints(free: &[i64]) -> Self {
        Self::from_free(&free.iter().map(|&x| int(x)).collect::<Vec<_>>())
    }

    pub fn zero(n: usize) -> Self {
        Self { values: vec![Rational::zero(); n + 1] }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn free(&self) -> &[Rational] {
        &self.values[1..]
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }
}

/// `τ_j = μ_α − α_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauVector {
    pub values: Vec<Rational>,
}

/// A decomposition `t = left + right` with both sides of positive total rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeSplit {
    pub left: ChainType,
    pub right: ChainType,
}

impl TypeSplit {
    pub fn new(parent: &ChainType, left: ChainType, right: ChainType) -> Result<Self> {
        if &left.checked_add(&right)? != parent {
            return Err(Error::invalid("split does not sum to the parent type"));
        }
        if left.total_rank() == 0 || right.total_rank() == 0 {
            return Err(Error::invalid("both sides of a split need positive total rank"));
        }
        Ok(Self { left, right })
    }

    pub fn parent(&self) -> ChainType {
        self.left.checked_add(&self.right).expect("split sides have equal length")
    }
}

/// `Σ_j (d_j + α_j r_j)` for an arbitrary weight vector.
pub fn alpha_degree_raw(t: &ChainType, alpha: &[Rational]) -> Result<Rational> {
    same_len(t.len(), alpha.len())?;
    Ok(t.ranks
        .iter()
        .zip(&t.degrees)
        .zip(alpha)
        .map(|((&r, &d), a)| int(d) + a * int(r))
        .fold(Rational::zero(), |acc, x| acc + x))
}

pub fn alpha_degree(t: &ChainType, alpha: &StabilityParameter) -> Result<Rational> {
    alpha_degree_raw(t, alpha.values())
}

/// α-slope for an arbitrary weight vector (no normalization of `α_0`).
pub fn alpha_slope_raw(t: &ChainType, alpha: &[Rational]) -> Result<Rational> {
    let r = t.total_rank();
    if r == 0 {
        return Err(Error::invalid("α-slope of a chain with total rank 0"));
    }
    Ok(alpha_degree_raw(t, alpha)? / int(r))
}

pub fn alpha_slope(t: &ChainType, alpha: &StabilityParameter) -> Result<Rational> {
    alpha_slope_raw(t, alpha.values())
}

/// Type of the dual chain: ranks reversed, degrees negated and reversed.
pub fn dual_type(t: &ChainType) -> ChainType {
    ChainType {
        ranks: t.ranks.iter().rev().copied().collect(),
        degrees: t.degrees.iter().rev().map(|d| -d).collect(),
    }
}

/// `α'_j = α_n − α_{n−j}`.
pub fn dual_parameter(alpha: &StabilityParameter) -> StabilityParameter {
    let v = alpha.values();
    let n = v.len() - 1;
    StabilityParameter { values: (0..=n).map(|j| &v[n] - &v[n - j]).collect() }
}

pub fn dualize(t: &ChainType, alpha: &StabilityParameter) -> Result<(ChainType, StabilityParameter)> {
    same_len(t.len(), alpha.values().len())?;
    Ok((dual_type(t), dual_parameter(alpha)))
}

/// `χ(C'', C')` computed from the types via Riemann–Roch on each Hom bundle.
pub fn chi_holomorphic(t2: &ChainType, t1: &ChainType, g: i64) -> Result<i64> {
    same_len(t2.len(), t1.len())?;
    let (r2, d2, r1, d1) = (&t2.ranks, &t2.degrees, &t1.ranks, &t1.degrees);
    let n = t1.n();
    let rank0: i64 = (0..=n).map(|i| r2[i] * r1[i]).sum();
    let rank1: i64 = (1..=n).map(|i| r2[i] * r1[i - 1]).sum();
    let deg0: i64 = (0..=n).map(|i| r2[i] * d1[i] - r1[i] * d2[i]).sum();
    let deg1: i64 = (1..=n).map(|i| r2[i] * d1[i - 1] - r1[i - 1] * d2[i]).sum();
    Ok((1 - g) * (rank0 - rank1) + deg0 - deg1)
}

/// `χ(E, F) = (1−g) rk E rk F + rk E deg F − rk F deg E`.
pub fn riemann_roch_chi(rk_e: i64, deg_e: i64, rk_f: i64, deg_f: i64, g: i64) -> Result<i64> {
    if rk_e <= 0 || rk_f <= 0 {
        return Err(Error::invalid("ranks must be positive"));
    }
    Ok((1 - g) * rk_e * rk_f + rk_e * deg_f - rk_f * deg_e)
}

/// Expected dimension of the moduli space of stable chains of the type.
pub fn moduli_dimension(inst: &ProblemInstance) -> Result<i64> {
    let t = &inst.chain_type;
    if !t.all_ranks_positive() {
        return Err(Error::precondition("all-ranks-positive", format!("{t} has a zero rank")));
    }
    let (r, d, g) = (&t.ranks, &t.degrees, inst.genus);
    let n = t.n();
    let quad: i64 = (0..=n).map(|i| r[i] * r[i]).sum::<i64>() - (1..=n).map(|i| r[i] * r[i - 1]).sum::<i64>();
    let lin: i64 = (1..=n).map(|i| r[i] * d[i - 1] - r[i - 1] * d[i]).sum();
    Ok((g - 1) * quad + lin + 1)
}

/// `h⁰ − χ`, valid when the second hypercohomology vanishes.
pub fn ext1_dim_under_vanishing(t2: &ChainType, t1: &ChainType, g: i64, h0: i64) -> Result<i64> {
    let v = h0 - chi_holomorphic(t2, t1, g)?;
    if v < 0 {
        return Err(Error::precondition(
            "vanishing-consistency",
            format!("h0 − χ = {v} is negative; the vanishing assumptions cannot hold"),
        ));
    }
    Ok(v)
}

pub fn tau_from_alpha(t: &ChainType, alpha: &StabilityParameter) -> Result<TauVector> {
    let mu = alpha_slope(t, alpha)?;
    Ok(TauVector { values: alpha.values().iter().map(|a| &mu - a).collect() })
}

/// `α_j = τ_0 − τ_j`.
pub fn alpha_from_tau(tau: &TauVector) -> Result<StabilityParameter> {
    let t0 = tau.values.first().ok_or_else(|| Error::invalid("empty τ"))?;
    Ok(StabilityParameter { values: tau.values.iter().map(|t| t0 - t).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::rat;

    fn t(r: &[i64], d: &[i64]) -> ChainType {
        ChainType::of(r, d)
    }

    #[test]
    fn type_validation() {
        assert!(ChainType::new(vec![1, 0], vec![1, 2]).is_err());
        assert!(ChainType::new(vec![1], vec![1]).is_err());
        assert!(ChainType::new(vec![1, -1], vec![0, 0]).is_err());
        assert_eq!("1,1,1:2,1,0".parse::<ChainType>().unwrap(), t(&[1, 1, 1], &[2, 1, 0]));
        assert_eq!("(2,1;3,1)".parse::<ChainType>().unwrap().to_string(), "(2,1;3,1)");
    }

    #[test]
    fn alpha_degree_and_slope() {
        let a = StabilityParameter::from_free_ints(&[1, 2]);
        assert_eq!(alpha_degree(&t(&[1, 1, 1], &[2, 1, 0]), &a).unwrap(), int(6));
        assert_eq!(alpha_slope(&t(&[1, 1, 1], &[2, 1, 0]), &a).unwrap(), int(2));
        let b = StabilityParameter::from_free(&[rat(1, 2)]);
        assert_eq!(alpha_degree(&t(&[2, 1], &[3, 1]), &b).unwrap(), rat(9, 2));
        assert_eq!(alpha_slope(&t(&[1, 1], &[1, 0]), &StabilityParameter::zero(1)).unwrap(), rat(1, 2));
        let shifted = [int(5), int(6), int(7)];
        assert_eq!(alpha_slope_raw(&t(&[1, 1, 1], &[2, 1, 0]), &shifted).unwrap(), int(7));
    }

    #[test]
    fn dualize_examples() {
        let (dt, da) = dualize(&t(&[1, 2, 1], &[2, 0, 0]), &StabilityParameter::from_free_ints(&[1, 3])).unwrap();
        assert_eq!(dt, t(&[1, 2, 1], &[0, 0, -2]));
        assert_eq!(da, StabilityParameter::from_free_ints(&[2, 3]));
        let (dt, da) = dualize(&t(&[1, 1], &[1, 0]), &StabilityParameter::from_free_ints(&[2])).unwrap();
        assert_eq!(dt, t(&[1, 1], &[0, -1]));
        assert_eq!(da, StabilityParameter::from_free_ints(&[2]));
        let (t0, a0) = (t(&[2, 1], &[3, 1]), StabilityParameter::from_free_ints(&[1]));
        let (t1, a1) = dualize(&t0, &a0).unwrap();
        assert_eq!(dualize(&t1, &a1).unwrap(), (t0, a0));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_holomorphic(&t(&[0, 1, 0], &[0, 5, 0]), &t(&[1, 0, 0], &[3, 0, 0]), 2).unwrap(), 3);
        let u = t(&[1, 1, 1], &[0, 0, 0]);
        assert_eq!(chi_holomorphic(&u, &u, 2).unwrap(), -1);
        let (m, d0, d1, d2) = (3, 5, 2, 1);
        let t2 = t(&[0, m - 1, 0], &[0, d1 - d2, 0]);
        let t1 = t(&[1, 1, 1], &[d0, d2, d2]);
        for g in 2..6 {
            assert_eq!(chi_holomorphic(&t2, &t1, g).unwrap(), -(m - 1) * (d0 - d2));
        }
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(riemann_roch_chi(1, 0, 1, 0, 2).unwrap(), -1);
        assert_eq!(riemann_roch_chi(1, 3, 1, 0, 2).unwrap(), -4);
        assert_eq!(riemann_roch_chi(2, 4, 2, 4, 3).unwrap(), -8);
        assert!(riemann_roch_chi(0, 0, 1, 0, 2).is_err());
    }

    #[test]
    fn moduli_dimension_examples() {
        let dim = |r: &[i64], d: &[i64], g| moduli_dimension(&ProblemInstance::new(g, t(r, d)).unwrap()).unwrap();
        assert_eq!(dim(&[2, 1, 1], &[3, 0, 0], 2), 7);
        assert_eq!(dim(&[1, 1], &[1, 0], 2), 3);
        assert_eq!(dim(&[1, 1, 1], &[0, 0, 0], 2), 2);
        assert!(moduli_dimension(&ProblemInstance::new(2, t(&[1, 0], &[0, 0])).unwrap()).is_err());
        assert!(ProblemInstance::new(1, t(&[1, 1], &[0, 0])).is_err());
    }

    #[test]
    fn ext1_examples() {
        let (m, d0, d1, d2) = (3, 5, 2, 1);
        let t2 = t(&[0, m - 1, 0], &[0, d1 - d2, 0]);
        let t1 = t(&[1, 1, 1], &[d0, d2, d2]);
        assert_eq!(ext1_dim_under_vanishing(&t2, &t1, 2, 0).unwrap(), 8);
        // Quotient of rank m−1 and degree d0−d1 against a line bundle of degree d1.
        let (m, d0, d1, g) = (2, 3, 0, 2);
        let q = t(&[m - 1, 0], &[d0 - d1, 0]);
        let e = t(&[1, 0], &[d1, 0]);
        assert_eq!(ext1_dim_under_vanishing(&q, &e, g, 0).unwrap(), 4);
        let u = t(&[1, 1, 1], &[2, 1, 0]);
        let dim = moduli_dimension(&ProblemInstance::new(3, u.clone()).unwrap()).unwrap();
        assert_eq!(ext1_dim_under_vanishing(&u, &u, 3, 1).unwrap(), dim);
        assert!(ext1_dim_under_vanishing(&t(&[0, 1, 0], &[0, 5, 0]), &t(&[1, 0, 0], &[3, 0, 0]), 2, 0).is_err());
    }

    #[test]
    fn tau_conversion() {
        let tt = t(&[1, 1, 1], &[2, 1, 0]);
        let a = StabilityParameter::from_free_ints(&[1, 2]);
        let tau = tau_from_alpha(&tt, &a).unwrap();
        assert_eq!(tau.values, vec![int(2), int(1), int(0)]);
        assert_eq!(alpha_from_tau(&tau).unwrap(), a);
        let z = tau_from_alpha(&tt, &StabilityParameter::zero(2)).unwrap();
        assert!(z.values.iter().all(|v| v == &int(1)));
    }

    #[test]
    fn split_validation() {
        let p = t(&[1, 1], &[1, 0]);
        assert!(TypeSplit::new(&p, t(&[0, 1], &[0, 0]), t(&[1, 0], &[1, 0])).is_ok());
        assert!(TypeSplit::new(&p, t(&[0, 0], &[0, 0]), p.clone()).is_err());
        assert!(TypeSplit::new(&p, t(&[0, 1], &[0, 1]), t(&[1, 0], &[1, 0])).is_err());
    }
}
