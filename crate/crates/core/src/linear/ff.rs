//! Dense linear algebra over the prime fields F_2 and F_3.

use crate::error::{Error, Result};

/// Row-major matrix with entries in `0..q`.
pub type Matrix = Vec<Vec<u8>>;

pub fn check_prime(q: u8) -> Result<()> {
    if q == 2 || q == 3 {
        Ok(())
    } else {
        Err(Error::invalid(format!("field size must be 2 or 3, got {q}")))
    }
}

fn inv(a: u8, q: u8) -> u8 {
    // Every nonzero element of F_2 and F_3 is its own inverse.
    debug_assert!(a != 0 && a < q);
    a
}

/// Reduced row echelon form with zero rows removed.
pub fn rref(rows: &[Vec<u8>], q: u8) -> Matrix {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for c in 0..cols {
        let Some(p) = (pivot_row..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(pivot_row, p);
        let s = inv(m[pivot_row][c], q);
        for x in m[pivot_row].iter_mut() {
            *x = (*x * s) % q;
        }
        for i in 0..m.len() {
            if i != pivot_row && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + q * q - (f * m[pivot_row][k]) % q) % q;
                }
            }
        }
        pivot_row += 1;
    }
    m.truncate(pivot_row);
    m
}

pub fn rank(rows: &[Vec<u8>], q: u8) -> usize {
    rref(rows, q).len()
}

/// `m · v` for a column vector `v`.
pub fn apply(m: &Matrix, v: &[u8], q: u8) -> Vec<u8> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u32, |acc, (a, b)| acc + (*a as u32) * (*b as u32)) % q as u32)
        .map(|x| x as u8)
        .collect()
}

pub fn transpose(m: &Matrix, rows: usize, cols: usize) -> Matrix {
    (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect()
}

pub fn zero_matrix(rows: usize, cols: usize) -> Matrix {
    vec![vec![0; cols]; rows]
}

pub fn identity(k: usize) -> Matrix {
    (0..k).map(|i| (0..k).map(|j| u8::from(i == j)).collect()).collect()
}

/// A subspace of `F_q^dim` stored by its RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub dim_ambient: usize,
    pub basis: Matrix,
}

impl Subspace {
    pub fn zero(dim_ambient: usize) -> Self {
        Self { dim_ambient, basis: Vec::new() }
    }

    pub fn span(dim_ambient: usize, vectors: &[Vec<u8>], q: u8) -> Self {
        Self { dim_ambient, basis: rref(vectors, q) }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Image under a `rows × dim_ambient` matrix.
    pub fn image(&self, m: &Matrix, target_dim: usize, q: u8) -> Subspace {
        let imgs: Vec<Vec<u8>> = self.basis.iter().map(|v| apply(m, v, q)).collect();
        Subspace::span(target_dim, &imgs, q)
    }

    pub fn contains(&self, other: &Subspace, q: u8) -> bool {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        rank(&all, q) == self.dim()
    }
}

/// All vectors of `F_q^k` in lexicographic order.
pub fn all_vectors(k: usize, q: u8) -> Vec<Vec<u8>> {
    let total = (q as usize).pow(k as u32);
    (0..total)
        .map(|mut x| {
            let mut v = vec![0u8; k];
            for slot in v.iter_mut().rev() {
                *slot = (x % q as usize) as u8;
                x /= q as usize;
            }
            v
        })
        .collect()
}

/// Every subspace of `F_q^k`, each exactly once (enumerated by RREF shape).
pub fn all_subspaces(k: usize, q: u8) -> Vec<Subspace> {
    let mut out = Vec::new();
    for d in 0..=k {
        for pivots in combinations(k, d) {
            let free: Vec<(usize, usize)> = (0..d)
                .flat_map(|i| {
                    let pv = pivots.clone();
                    ((pv[i] + 1)..k).filter(move |c| !pv.contains(c)).map(move |c| (i, c))
                })
                .collect();
            for fill in all_vectors(free.len(), q) {
                let mut basis = zero_matrix(d, k);
                for (i, &p) in pivots.iter().enumerate() {
                    basis[i][p] = 1;
                }
                for ((i, c), v) in free.iter().zip(&fill) {
                    basis[*i][*c] = *v;
                }
                out.push(Subspace { dim_ambient: k, basis });
            }
        }
    }
    out
}

/// Every subspace of `F_q^k` containing `u`.
pub fn subspaces_containing(u: &Subspace, q: u8) -> Vec<Subspace> {
    let k = u.dim_ambient;
    if u.dim() == 0 {
        return all_subspaces(k, q);
    }
    // Complete u to a basis with standard vectors outside its pivot columns,
    // then lift every subspace of the quotient.
    let pivots: Vec<usize> = u.basis.iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
    let complement: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
    all_subspaces(complement.len(), q)
        .into_iter()
        .map(|s| {
            let mut vecs = u.basis.clone();
            for row in &s.basis {
                let mut v = vec![0u8; k];
                for (j, &c) in complement.iter().enumerate() {
                    v[c] = row[j];
                }
                vecs.push(v);
            }
            Subspace::span(k, &vecs, q)
        })
        .collect()
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Gaussian binomial coefficient counted by brute force over spans.
    fn count_by_spans(k: usize, q: u8) -> usize {
        let vecs = all_vectors(k, q);
        let mut seen = std::collections::HashSet::new();
        // Every subspace of dimension ≤ 2 is spanned by two vectors; for k ≤ 2 this is exhaustive.
        for a in &vecs {
            for b in &vecs {
                seen.insert(rref(&[a.clone(), b.clone()], q));
            }
        }
        seen.len()
    }

    #[test]
    fn subspace_counts() {
        assert_eq!(all_subspaces(2, 2).len(), 5);
        assert_eq!(all_subspaces(2, 3).len(), 6);
        assert_eq!(all_subspaces(3, 2).len(), 16);
        assert_eq!(all_subspaces(3, 3).len(), 28);
        assert_eq!(all_subspaces(4, 3).len(), 212);
        assert_eq!(all_subspaces(2, 2).len(), count_by_spans(2, 2));
        assert_eq!(all_subspaces(2, 3).len(), count_by_spans(2, 3));
    }

    #[test]
    fn subspaces_are_distinct_and_reduced() {
        let subs = all_subspaces(3, 3);
        let set: std::collections::HashSet<_> = subs.iter().map(|s| s.basis.clone()).collect();
        assert_eq!(set.len(), subs.len());
        for s in &subs {
            assert_eq!(rref(&s.basis, 3), s.basis);
        }
    }

    #[test]
    fn containing_subspaces() {
        let u = Subspace::span(3, &[vec![1, 1, 0]], 2);
        let over = subspaces_containing(&u, 2);
        // Subspaces of F_2^3 containing a line: the line, 3 planes, the whole space.
        assert_eq!(over.len(), 5);
        assert!(over.iter().all(|w| w.contains(&u, 2)));
    }

    #[test]
    fn rank_over_both_fields() {
        let m = vec![vec![1, 1], vec![1, 2]];
        assert_eq!(rank(&m, 3), 2);
        let m2 = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(rank(&m2, 2), 1);
        assert_eq!(rank(&[vec![2, 1], vec![1, 2]], 3), 1);
    }
}
