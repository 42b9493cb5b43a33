//! Brute-force semistability of linear chains over F_2 and F_3.
//!
//! A subchain is a tuple of subspaces `W_j ⊆ V_j` with `f_i(W_i) ⊆ W_{i−1}`.
//! Only the dimension vectors of subchains enter the slope test, so the
//! search walks down from slot `n`, tracking the image forced into the next
//! slot, and collects the achievable dimension vectors.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::ff::{self, Matrix, Subspace};
use super::interval::{DimensionVector, IntervalModule};
use crate::chain::StabilityParameter;
use crate::error::{Error, Result};
use crate::geometry::rational::{int, Rational};

pub const SINGLE_REP_CAP: usize = 8;
pub const EXISTENCE_CAP: usize = 6;

/// A linear chain over F_q; `maps[i-1]` is `f_i : V_i → V_{i−1}` as a
/// `dims[i−1] × dims[i]` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldRep {
    pub q: u8,
    pub dims: DimensionVector,
    pub maps: Vec<Matrix>,
}

impl FiniteFieldRep {
    pub fn new(q: u8, dims: DimensionVector, maps: Vec<Matrix>) -> Result<Self> {
        ff::check_prime(q)?;
        if maps.len() != dims.n() {
            return Err(Error::DimensionMismatch { expected: dims.n(), got: maps.len() });
        }
        for (i, m) in maps.iter().enumerate() {
            let (rows, cols) = (dims.dims[i], dims.dims[i + 1]);
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(Error::invalid(format!("map f_{} must be {rows}×{cols}", i + 1)));
            }
            if m.iter().flatten().any(|&x| x >= q) {
                return Err(Error::invalid("matrix entry outside the field"));
            }
        }
        Ok(Self { q, dims, maps })
    }

    /// Every map is zero.
    pub fn zero(q: u8, dims: DimensionVector) -> Self {
        let maps = (1..dims.dims.len()).map(|i| ff::zero_matrix(dims.dims[i - 1], dims.dims[i])).collect();
        Self { q, dims, maps }
    }

    /// Equal dimensions with identity maps.
    pub fn identity_chain(q: u8, dim: usize, n: usize) -> Self {
        Self { q, dims: DimensionVector { dims: vec![dim; n + 1] }, maps: vec![ff::identity(dim); n] }
    }

    /// The interval module `δ[p,q]` realized with 1×1 identity maps.
    pub fn interval(field: u8, m: &IntervalModule) -> Self {
        let dims = m.dimension_vector();
        let maps = (1..=m.n)
            .map(|i| {
                let (rows, cols) = (dims.dims[i - 1], dims.dims[i]);
                if rows == 1 && cols == 1 {
                    vec![vec![1]]
                } else {
                    ff::zero_matrix(rows, cols)
                }
            })
            .collect();
        Self { q: field, dims, maps }
    }

    /// Direct sum, block diagonal in every slot.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.q != other.q || self.dims.dims.len() != other.dims.dims.len() {
            return Err(Error::invalid("direct sum needs the same field and length"));
        }
        let dims: Vec<usize> = self.dims.dims.iter().zip(&other.dims.dims).map(|(a, b)| a + b).collect();
        let maps = (1..dims.len())
            .map(|i| {
                let (ra, ca) = (self.dims.dims[i - 1], self.dims.dims[i]);
                let mut m = ff::zero_matrix(dims[i - 1], dims[i]);
                for r in 0..ra {
                    m[r][..ca].copy_from_slice(&self.maps[i - 1][r]);
                }
                for r in 0..other.dims.dims[i - 1] {
                    m[ra + r][ca..].copy_from_slice(&other.maps[i - 1][r]);
                }
                m
            })
            .collect();
        Ok(Self { q: self.q, dims: DimensionVector { dims }, maps })
    }

    /// Dual chain: slots reversed and every map transposed.
    pub fn dual(&self) -> Self {
        let n = self.dims.n();
        let dims: Vec<usize> = self.dims.dims.iter().rev().copied().collect();
        let maps = (1..=n)
            .map(|i| {
                let src = n - i + 1;
                ff::transpose(&self.maps[src - 1], self.dims.dims[src - 1], self.dims.dims[src])
            })
            .collect();
        Self { q: self.q, dims: DimensionVector { dims }, maps }
    }

    /// Dimension vectors of all subchains, including zero and the whole chain.
    pub fn subchain_dimensions(&self) -> BTreeSet<Vec<usize>> {
        let n = self.dims.n();
        let mut out = BTreeSet::new();
        let mut cur = vec![0usize; n + 1];
        self.walk(n, &Subspace::zero(self.dims.dims[n]), &mut cur, &mut out);
        out
    }

    fn walk(&self, slot: usize, forced: &Subspace, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if slot == 0 {
            for d in forced.dim()..=self.dims.dims[0] {
                cur[0] = d;
                out.insert(cur.clone());
            }
            return;
        }
        let mut seen_images = BTreeSet::new();
        for w in ff::subspaces_containing(forced, self.q) {
            let img = w.image(&self.maps[slot - 1], self.dims.dims[slot - 1], self.q);
            if !seen_images.insert((w.dim(), img.basis.clone())) {
                continue;
            }
            cur[slot] = w.dim();
            self.walk(slot - 1, &img, cur, out);
        }
        cur[slot] = 0;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleVerdict {
    pub semistable: bool,
    /// Dimension vector of a subchain with the largest slope excess.
    pub witness: Option<Vec<usize>>,
}

fn weighted(alpha: &[Rational], w: &[usize]) -> Rational {
    alpha.iter().zip(w).map(|(a, &k)| a * int(k as i64)).fold(Rational::zero(), |x, y| x + y)
}

/// Slope test over a set of achievable subchain dimension vectors.
pub fn verdict_from_dimensions(
    dims: &[usize],
    subs: &BTreeSet<Vec<usize>>,
    alpha: &[Rational],
    strict: bool,
) -> OracleVerdict {
    let total: usize = dims.iter().sum();
    let mu = weighted(alpha, dims) / int(total as i64);
    let mut worst: Option<(Rational, Vec<usize>)> = None;
    for w in subs {
        let size: usize = w.iter().sum();
        if size == 0 || (strict && w.as_slice() == dims) {
            continue;
        }
        let excess = weighted(alpha, w) / int(size as i64) - &mu;
        let bad = if strict { excess >= Rational::zero() } else { excess > Rational::zero() };
        if bad && worst.as_ref().is_none_or(|(e, _)| excess > *e) {
            worst = Some((excess, w.clone()));
        }
    }
    OracleVerdict { semistable: worst.is_none(), witness: worst.map(|(_, w)| w) }
}

pub fn oracle_is_semistable(rep: &FiniteFieldRep, alpha: &StabilityParameter, strict: bool) -> Result<OracleVerdict> {
    let total = rep.dims.total();
    if total > SINGLE_REP_CAP {
        return Err(Error::CapExceeded { what: "total dimension".into(), value: total, cap: SINGLE_REP_CAP });
    }
    if alpha.values().len() != rep.dims.dims.len() {
        return Err(Error::DimensionMismatch { expected: rep.dims.dims.len(), got: alpha.values().len() });
    }
    if total == 0 {
        return Err(Error::invalid("zero linear chain"));
    }
    Ok(verdict_from_dimensions(&rep.dims.dims, &rep.subchain_dimensions(), alpha.values(), strict))
}

/// Every representation with dimension vector `r` over F_q.
pub fn all_reps(r: &DimensionVector, q: u8) -> Result<impl Iterator<Item = FiniteFieldRep> + '_> {
    ff::check_prime(q)?;
    let shapes: Vec<(usize, usize)> = (1..r.dims.len()).map(|i| (r.dims[i - 1], r.dims[i])).collect();
    let entries: usize = shapes.iter().map(|(a, b)| a * b).sum();
    let count = (q as usize).checked_pow(entries as u32).ok_or_else(|| Error::CapExceeded {
        what: "map entries".into(),
        value: entries,
        cap: 20,
    })?;
    Ok((0..count).map(move |mut code| {
        let maps = shapes
            .iter()
            .map(|&(rows, cols)| {
                let mut m = ff::zero_matrix(rows, cols);
                for row in m.iter_mut() {
                    for x in row.iter_mut() {
                        *x = (code % q as usize) as u8;
                        code /= q as usize;
                    }
                }
                m
            })
            .collect();
        FiniteFieldRep { q, dims: r.clone(), maps }
    }))
}

/// Whether some representation of dimension vector `r` over F_q is
/// α-semistable (or α-stable when `strict`).
pub fn oracle_exists_semistable(r: &DimensionVector, alpha: &StabilityParameter, q: u8, strict: bool) -> Result<bool> {
    let total = r.total();
    if total > EXISTENCE_CAP {
        return Err(Error::CapExceeded { what: "total dimension".into(), value: total, cap: EXISTENCE_CAP });
    }
    if total == 0 {
        return Err(Error::invalid("zero dimension vector"));
    }
    if alpha.values().len() != r.dims.len() {
        return Err(Error::DimensionMismatch { expected: r.dims.len(), got: alpha.values().len() });
    }
    for rep in all_reps(r, q)? {
        if verdict_from_dimensions(&r.dims, &rep.subchain_dimensions(), alpha.values(), strict).semistable {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(hom, ext)` between two representations, from the two-term complex
/// `⊕ Hom(V''_i, V'_i) → ⊕_{i≥1} Hom(V''_i, V'_{i−1})`,
/// `ψ ↦ (ψ_{i−1} f''_i − f'_i ψ_i)_i`.
pub fn hom_ext_dims(rep2: &FiniteFieldRep, rep1: &FiniteFieldRep) -> Result<(usize, usize)> {
    if rep2.q != rep1.q || rep2.dims.dims.len() != rep1.dims.dims.len() {
        return Err(Error::invalid("representations must share field and length"));
    }
    let q = rep1.q;
    let (a, b) = (&rep2.dims.dims, &rep1.dims.dims);
    let n = a.len() - 1;
    // Variable (i, row, col) is entry (row, col) of ψ_i : V''_i → V'_i.
    let mut offset = vec![0usize; n + 2];
    for i in 0..=n {
        offset[i + 1] = offset[i] + b[i] * a[i];
    }
    let nvars = offset[n + 1];
    let var = |i: usize, row: usize, col: usize| offset[i] + row * a[i] + col;
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut f1_dim = 0;
    for i in 1..=n {
        let (f2, f1) = (&rep2.maps[i - 1], &rep1.maps[i - 1]);
        for x in 0..b[i - 1] {
            for y in 0..a[i] {
                f1_dim += 1;
                let mut eq = vec![0u8; nvars];
                // (ψ_{i−1} f''_i)[x][y] = Σ_c ψ_{i−1}[x][c] f''_i[c][y]
                for c in 0..a[i - 1] {
                    let v = var(i - 1, x, c);
                    eq[v] = (eq[v] + f2[c][y]) % q;
                }
                // −(f'_i ψ_i)[x][y] = −Σ_c f'_i[x][c] ψ_i[c][y]
                for c in 0..b[i] {
                    let v = var(i, c, y);
                    eq[v] = (eq[v] + (q - f1[x][c] % q) % q) % q;
                }
                rows.push(eq);
            }
        }
    }
    let rk = if nvars == 0 { 0 } else { ff::rank(&rows, q) };
    Ok((nvars - rk, f1_dim - rk))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(a: &[i64]) -> StabilityParameter {
        StabilityParameter::from_free_ints(a)
    }

    #[test]
    fn identity_three_chain() {
        let rep = FiniteFieldRep::identity_chain(2, 1, 2);
        assert!(oracle_is_semistable(&rep, &alpha(&[1, 2]), false).unwrap().semistable);
        let v = oracle_is_semistable(&rep, &alpha(&[3, 1]), false).unwrap();
        assert!(!v.semistable);
        assert_eq!(v.witness, Some(vec![1, 1, 0]));
    }

    #[test]
    fn zero_parameter_is_always_semistable() {
        for rep in all_reps(&DimensionVector::of(&[1, 2, 1]), 2).unwrap() {
            assert!(oracle_is_semistable(&rep, &alpha(&[0, 0]), false).unwrap().semistable);
        }
    }

    #[test]
    fn existence_examples() {
        let d = DimensionVector::of;
        assert!(!oracle_exists_semistable(&d(&[2, 1, 2]), &alpha(&[1, 0]), 2, false).unwrap());
        assert!(oracle_exists_semistable(&d(&[2, 1, 2]), &alpha(&[0, 0]), 2, false).unwrap());
        assert!(oracle_exists_semistable(&d(&[1, 2, 1]), &alpha(&[1, 2]), 2, false).unwrap());
        assert!(matches!(
            oracle_exists_semistable(&d(&[3, 2, 2]), &alpha(&[0, 0]), 2, false),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn subchain_dimensions_of_zero_maps() {
        let rep = FiniteFieldRep::zero(2, DimensionVector::of(&[1, 1]));
        let s = rep.subchain_dimensions();
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn hom_ext_of_intervals() {
        let iv = |p, q| IntervalModule::new(p, q, 1).unwrap();
        let r = |m: &IntervalModule| FiniteFieldRep::interval(2, m);
        assert_eq!(hom_ext_dims(&r(&iv(1, 1)), &r(&iv(0, 0))).unwrap(), (0, 1));
        assert_eq!(hom_ext_dims(&r(&iv(0, 1)), &r(&iv(0, 1))).unwrap(), (1, 0));
        assert_eq!(hom_ext_dims(&r(&iv(0, 0)), &r(&iv(1, 1))).unwrap(), (0, 0));
    }

    #[test]
    fn dual_is_involutive() {
        for rep in all_reps(&DimensionVector::of(&[1, 2, 1]), 2).unwrap().take(40) {
            assert_eq!(rep.dual().dual(), rep);
        }
    }
}
