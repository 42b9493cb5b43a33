//! Membership of rank splits in the set `V(r)`: splits admitting interval
//! decompositions whose cross pairs have no Hom and no Ext.

use serde::{Deserialize, Serialize};

use super::interval::{enumerate_interval_decompositions, interval_pairing, DimensionVector, IntervalDecomposition};
use crate::error::{Error, Result};

/// Decompositions of the two sides witnessing membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VWitness {
    pub left: IntervalDecomposition,
    pub right: IntervalDecomposition,
}

fn orthogonal(right: &IntervalDecomposition, left: &IntervalDecomposition) -> Result<bool> {
    for (m2, _) in &right.parts {
        for (m1, _) in &left.parts {
            let p = interval_pairing(m2, m1)?;
            if p.hom != 0 || p.ext != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `(r1, r2)` lies in `V(r1 + r2)`, with `r1` playing `r'` and `r2`
/// playing `r''`. Returns the first witness in canonical order.
pub fn in_v_set(r1: &DimensionVector, r2: &DimensionVector, cap: usize) -> Result<Option<VWitness>> {
    if r1.dims.len() != r2.dims.len() {
        return Err(Error::DimensionMismatch { expected: r1.dims.len(), got: r2.dims.len() });
    }
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::invalid("both dimension vectors must be nonzero"));
    }
    let lefts = enumerate_interval_decompositions(r1, cap)?;
    let rights = enumerate_interval_decompositions(r2, cap)?;
    for left in &lefts {
        for right in &rights {
            if orthogonal(right, left)? {
                return Ok(Some(VWitness { left: left.clone(), right: right.clone() }));
            }
        }
    }
    Ok(None)
}
