//! Standard hyperplanes and the gap region `R_{2g−2}`.

use crate::chain::ChainType;
use crate::error::{Error, Result};
use crate::geometry::functional::{AffineFunctional, Halfspace, Sense};
use crate::geometry::rational::int;

use super::region::{LabeledHalfspace, RegionReport};
use super::walls::{signature_functional, SubchainSignature};

/// Signature of the truncation `(E_0, …, E_i, 0, …, 0)`.
pub fn standard_signature(t: &ChainType, i: usize) -> SubchainSignature {
    let s = (0..t.len()).map(|j| if j <= i { t.ranks[j] } else { 0 }).collect();
    SubchainSignature::new(s, t.degrees[..=i].iter().sum())
}

/// The hyperplane `h_i` on which the `i`-th standard subchain has the same
/// α-slope as the chain, unscaled.
pub fn standard_hyperplane(t: &ChainType, i: usize) -> Result<AffineFunctional> {
    if i >= t.n() {
        return Err(Error::invalid(format!("standard index {i} out of range 0..{}", t.n())));
    }
    let partial: i64 = t.ranks[..=i].iter().sum();
    if partial == 0 {
        return Err(Error::precondition("positive-partial-rank", format!("r_0 + … + r_{i} = 0")));
    }
    if partial == t.total_rank() {
        return Err(Error::precondition("positive-partial-rank", format!("ranks after slot {i} vanish")));
    }
    let f = signature_functional(t, &standard_signature(t, i));
    if f.is_degenerate() {
        return Err(Error::Degenerate);
    }
    Ok(f)
}

pub fn standard_label(i: usize) -> String {
    format!("standard-subchain-{i}")
}

/// `H_0 ∩ … ∩ H_{n−1}`, each `H_i` the side where the standard subchain
/// does not destabilize.
pub fn standard_region(t: &ChainType) -> Result<RegionReport> {
    let hs = (0..t.n())
        .map(|i| Ok(LabeledHalfspace::new(standard_label(i), Halfspace::new(standard_hyperplane(t, i)?, Sense::Ge)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionReport::new(hs))
}

/// `α_1 ≥ 2g−2` and `α_i − α_{i−1} ≥ 2g−2`.
pub fn r2g2_region(n: usize, g: i64) -> Result<RegionReport> {
    if g < 2 {
        return Err(Error::precondition("genus-at-least-2", format!("g = {g}")));
    }
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let hs = (1..=n)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i - 1] = 1;
            if i >= 2 {
                c[i - 2] = -1;
            }
            LabeledHalfspace::ints(format!("gap-{i}"), &c, Sense::Ge, int(2 * g - 2))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionReport::new(hs))
}
