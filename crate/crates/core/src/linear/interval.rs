//! Dimension vectors, interval modules and their Hom/Ext pairing.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimensionVector {
    pub dims: Vec<usize>,
}

impl DimensionVector {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::invalid("dimension vectors need length at least 2"));
        }
        Ok(Self { dims })
    }

    pub fn of(dims: &[usize]) -> Self {
        Self::new(dims.to_vec()).expect("length at least 2")
    }

    /// From chain ranks, which are nonnegative by construction.
    pub fn from_ranks(ranks: &[i64]) -> Result<Self> {
        Self::new(ranks.iter().map(|&r| usize::try_from(r).map_err(|_| Error::invalid("negative rank"))).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The indecomposable linear chain supported on slots `p..=q` with identity
/// maps, inside chains with slots `0..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalModule {
    pub p: usize,
    pub q: usize,
    pub n: usize,
}

impl IntervalModule {
    pub fn new(p: usize, q: usize, n: usize) -> Result<Self> {
        if p > q || q > n {
            return Err(Error::invalid(format!("need 0 ≤ p ≤ q ≤ n, got [{p},{q}] in n={n}")));
        }
        Ok(Self { p, q, n })
    }

    pub fn all(n: usize) -> Vec<Self> {
        (0..=n).flat_map(|p| (p..=n).map(move |q| Self { p, q, n })).collect()
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        DimensionVector { dims: (0..=self.n).map(|i| usize::from(self.p <= i && i <= self.q)).collect() }
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ[{},{}]", self.p, self.q)
    }
}

pub fn interval_dimension_vector(m: &IntervalModule) -> DimensionVector {
    m.dimension_vector()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub hom: i64,
    pub ext: i64,
    pub chi: i64,
}

fn overlap(a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.1.min(b.1) - a.0.max(b.0) + 1).max(0)
}

/// Hom and Ext from `m2` to `m1`.
pub fn interval_pairing(m2: &IntervalModule, m1: &IntervalModule) -> Result<Pairing> {
    if m2.n != m1.n {
        return Err(Error::DimensionMismatch { expected: m1.n + 1, got: m2.n + 1 });
    }
    let (p1, q1, p2, q2) = (m1.p as i64, m1.q as i64, m2.p as i64, m2.q as i64);
    let hom = i64::from(q1 >= q2 && q2 >= p1 && p1 >= p2);
    let chi = overlap((p1, q1), (p2, q2)) - overlap((p1 + 1, q1 + 1), (p2, q2));
    Ok(Pairing { hom, ext: hom - chi, chi })
}

/// The interval-pair criterion written as explicit inequalities: at least
/// one strict separation holds and the two overlap counts agree.
pub fn separation_criterion(m2: &IntervalModule, m1: &IntervalModule) -> bool {
    let (p1, q1, p2, q2) = (m1.p as i64, m1.q as i64, m2.p as i64, m2.q as i64);
    let separated = p2 > p1 || q2 > q1 || p1 > q2 || p2 > q1;
    separated && overlap((p1, q1), (p2, q2)) == overlap((p1 + 1, q1 + 1), (p2, q2))
}

/// `Σ r''_i r'_i − Σ_{i≥1} r''_i r'_{i−1}`.
pub fn chi_linear(r2: &DimensionVector, r1: &DimensionVector) -> Result<i64> {
    if r2.dims.len() != r1.dims.len() {
        return Err(Error::DimensionMismatch { expected: r1.dims.len(), got: r2.dims.len() });
    }
    let (a, b) = (&r2.dims, &r1.dims);
    let same: usize = (0..a.len()).map(|i| a[i] * b[i]).sum();
    let shifted: usize = (1..a.len()).map(|i| a[i] * b[i - 1]).sum();
    Ok(same as i64 - shifted as i64)
}

/// A multiset of intervals, stored sorted by `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalDecomposition {
    pub n: usize,
    pub parts: Vec<(IntervalModule, usize)>,
}

impl IntervalDecomposition {
    pub fn from_intervals(n: usize, mut intervals: Vec<IntervalModule>) -> Self {
        intervals.sort();
        let mut parts: Vec<(IntervalModule, usize)> = Vec::new();
        for m in intervals {
            match parts.last_mut() {
                Some((last, k)) if *last == m => *k += 1,
                _ => parts.push((m, 1)),
            }
        }
        Self { n, parts }
    }

    /// Intervals with repetition, sorted.
    pub fn intervals(&self) -> Vec<IntervalModule> {
        self.parts.iter().flat_map(|(m, k)| std::iter::repeat_n(*m, *k)).collect()
    }

    pub fn dimension_vector(&self) -> DimensionVector {
        let mut dims = vec![0; self.n + 1];
        for (m, k) in &self.parts {
            for d in dims.iter_mut().take(m.q + 1).skip(m.p) {
                *d += k;
            }
        }
        DimensionVector { dims }
    }

    fn sort_key(&self) -> Vec<(usize, usize)> {
        self.intervals().iter().map(|m| (m.p, m.q)).collect()
    }
}

impl fmt::Display for IntervalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .parts
            .iter()
            .map(|(m, k)| if *k == 1 { m.to_string() } else { format!("{k}·{m}") })
            .collect();
        write!(f, "{{{}}}", s.join(", "))
    }
}

pub const DEFAULT_DECOMPOSITION_CAP: usize = 12;

/// All interval decompositions of `r`, sorted lexicographically by their
/// sorted `(p, q)` lists.
pub fn enumerate_interval_decompositions(r: &DimensionVector, cap: usize) -> Result<Vec<IntervalDecomposition>> {
    if r.total() > cap {
        return Err(Error::CapExceeded { what: "total dimension".into(), value: r.total(), cap });
    }
    let n = r.n();
    let mut out = Vec::new();
    let mut rem = r.dims.clone();
    let mut chosen = Vec::new();
    fill_slot(0, n, &mut rem, &mut chosen, &mut out);
    let mut decs: Vec<IntervalDecomposition> =
        out.into_iter().map(|ivs| IntervalDecomposition::from_intervals(n, ivs)).collect();
    decs.sort_by_key(|d| d.sort_key());
    Ok(decs)
}

/// Every interval starting at slot `p` must absorb what remains there.
fn fill_slot(
    p: usize,
    n: usize,
    rem: &mut Vec<usize>,
    chosen: &mut Vec<IntervalModule>,
    out: &mut Vec<Vec<IntervalModule>>,
) {
    if p > n {
        out.push(chosen.clone());
        return;
    }
    let need = rem[p];
    distribute(p, p, need, n, rem, chosen, out);
}

fn distribute(
    p: usize,
    q: usize,
    need: usize,
    n: usize,
    rem: &mut Vec<usize>,
    chosen: &mut Vec<IntervalModule>,
    out: &mut Vec<Vec<IntervalModule>>,
) {
    if need == 0 {
        fill_slot(p + 1, n, rem, chosen, out);
        return;
    }
    if q > n {
        return;
    }
    let max_k = (p..=q).map(|j| rem[j]).min().unwrap_or(0).min(need);
    let min_k = if q == n { need } else { 0 };
    for k in (min_k..=max_k).rev() {
        for slot in rem.iter_mut().take(q + 1).skip(p) {
            *slot -= k;
        }
        chosen.extend(std::iter::repeat_n(IntervalModule { p, q, n }, k));
        distribute(p, q + 1, need - k, n, rem, chosen, out);
        chosen.truncate(chosen.len() - k);
        for slot in rem.iter_mut().take(q + 1).skip(p) {
            *slot += k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(p: usize, q: usize, n: usize) -> IntervalModule {
        IntervalModule::new(p, q, n).unwrap()
    }

    #[test]
    fn interval_vectors() {
        assert_eq!(iv(0, 1, 2).dimension_vector().dims, vec![1, 1, 0]);
        assert_eq!(iv(2, 2, 2).dimension_vector().dims, vec![0, 0, 1]);
        assert_eq!(iv(0, 2, 2).dimension_vector().dims, vec![1, 1, 1]);
        assert!(IntervalModule::new(2, 1, 2).is_err());
        assert!(IntervalModule::new(0, 3, 2).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p = |a: IntervalModule, b: IntervalModule| {
            let x = interval_pairing(&a, &b).unwrap();
            (x.hom, x.ext, x.chi)
        };
        assert_eq!(p(iv(0, 0, 1), iv(1, 1, 1)), (0, 0, 0));
        assert_eq!(p(iv(1, 1, 1), iv(0, 1, 1)), (0, 0, 0));
        assert_eq!(p(iv(0, 1, 1), iv(0, 1, 1)), (1, 0, 1));
        assert_eq!(p(iv(1, 1, 1), iv(0, 0, 1)), (0, 1, -1));
        assert!(interval_pairing(&iv(0, 0, 1), &iv(0, 0, 2)).is_err());
    }

    #[test]
    fn chi_linear_examples() {
        let d = DimensionVector::of;
        assert_eq!(chi_linear(&d(&[1, 1]), &d(&[1, 1])).unwrap(), 1);
        assert_eq!(chi_linear(&d(&[1, 0, 0]), &d(&[0, 1, 1])).unwrap(), 0);
        assert_eq!(chi_linear(&d(&[2, 1, 2]), &d(&[2, 1, 2])).unwrap(), 5);
    }

    #[test]
    fn chi_linear_zero_example_matches_oracle() {
        use crate::linear::oracle::{hom_ext_dims, FiniteFieldRep};
        for q in [2, 3] {
            let m2 = FiniteFieldRep::interval(q, &iv(0, 0, 2));
            let m1 = FiniteFieldRep::interval(q, &iv(1, 2, 2));
            let (hom, ext) = hom_ext_dims(&m2, &m1).unwrap();
            assert_eq!(hom as i64 - ext as i64, 0);
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = DimensionVector::of;
        let decs = enumerate_interval_decompositions(&d(&[1, 1]), 12).unwrap();
        assert_eq!(decs.len(), 2);
        assert_eq!(decs[0].intervals(), vec![iv(0, 0, 1), iv(1, 1, 1)]);
        assert_eq!(decs[1].intervals(), vec![iv(0, 1, 1)]);
        let z = enumerate_interval_decompositions(&d(&[0, 0]), 12).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].parts.is_empty());
        let two = enumerate_interval_decompositions(&d(&[2, 0]), 12).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].parts, vec![(iv(0, 0, 1), 2)]);
        assert!(matches!(
            enumerate_interval_decompositions(&d(&[7, 6]), 12),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn decompositions_are_exact_and_unique() {
        let d = DimensionVector::of(&[2, 3, 1, 2]);
        let decs = enumerate_interval_decompositions(&d, 12).unwrap();
        let set: std::collections::HashSet<_> = decs.iter().map(|x| x.sort_key()).collect();
        assert_eq!(set.len(), decs.len());
        for x in &decs {
            assert_eq!(x.dimension_vector(), d);
        }
    }
}
