//! Randomized screening of `χ(C'', C') ≤ 1−g` for equal-slope pairs of
//! polystable models at parameters off the birationality boundary.
//!
//! Each side is a direct sum of α-stable pieces of a common α-slope `μ`:
//! a bundle concentrated in one slot, or a rank-one chain `L_i → L_{i−1}`
//! with `0 ≤ deg L_{i−1} − deg L_i < α_i − α_{i−1}`.

use serde::Serialize;

use super::birational::on_birationality_boundary;
use crate::chain::{alpha_slope, chi_holomorphic, ChainType, StabilityParameter};
use crate::error::{Error, Result};
use crate::geometry::rational::{int, Rational};

/// Uniform integer in the closed range `[lo, hi]`.
pub type IntSampler<'a> = dyn FnMut(i64, i64) -> i64 + 'a;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreeningSample {
    pub genus: i64,
    pub alpha: Vec<i64>,
    pub sub: ChainType,
    pub quotient: ChainType,
    pub chi: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScreeningReport {
    pub attempts: usize,
    pub accepted: usize,
    pub skipped_on_boundary: usize,
    pub violations: Vec<ScreeningSample>,
}

impl ScreeningReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// One polystable side for three slots at slope `mu`, or `None` when the
/// drawn pieces do not exist with integral degrees.
fn draw_side(alpha: &[i64; 3], mu: i64, sample: &mut IntSampler) -> Option<ChainType> {
    let mut r = [0i64; 3];
    let mut d = [0i64; 3];
    for _ in 0..sample(1, 3) {
        if sample(0, 1) == 0 {
            let i = sample(0, 2) as usize;
            let rr = sample(1, 3);
            r[i] += rr;
            d[i] += rr * (mu - alpha[i]);
        } else {
            let i = sample(1, 2) as usize;
            let gap = alpha[i] - alpha[i - 1];
            let total = 2 * mu - alpha[i] - alpha[i - 1];
            let diff = sample(0, gap);
            if (total - diff) % 2 != 0 || diff >= gap {
                return None;
            }
            let di = (total - diff) / 2;
            r[i] += 1;
            r[i - 1] += 1;
            d[i] += di;
            d[i - 1] += di + diff;
        }
    }
    ChainType::new(r.to_vec(), d.to_vec()).ok()
}

/// Draws until `draws` pairs off the boundary have been checked, giving up
/// after `max_attempts` attempts.
pub fn chi_screening(draws: usize, max_attempts: usize, sample: &mut IntSampler) -> Result<ScreeningReport> {
    let mut report = ScreeningReport::default();
    while report.accepted < draws {
        if report.attempts >= max_attempts {
            return Err(Error::CapExceeded { what: "screening attempts".into(), value: report.attempts, cap: max_attempts });
        }
        report.attempts += 1;
        let g = sample(2, 4);
        let a1 = sample(2 * g - 2, 3 * g);
        let a2 = a1 + sample(2 * g - 2, 3 * g);
        let alpha = [0, a1, a2];
        let mu = sample(-5, 15);
        let (Some(sub), Some(quotient)) = (draw_side(&alpha, mu, sample), draw_side(&alpha, mu, sample)) else {
            continue;
        };
        let parent = sub.checked_add(&quotient)?;
        let free: Vec<Rational> = vec![int(a1), int(a2)];
        if on_birationality_boundary(&parent, &free)? {
            report.skipped_on_boundary += 1;
            continue;
        }
        let param = StabilityParameter::from_free(&free);
        debug_assert_eq!(alpha_slope(&sub, &param)?, alpha_slope(&quotient, &param)?);
        report.accepted += 1;
        let chi = chi_holomorphic(&quotient, &sub, g)?;
        if chi > 1 - g {
            report.violations.push(ScreeningSample { genus: g, alpha: alpha.to_vec(), sub, quotient, chi });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Small linear congruential sampler; enough for a smoke test.
    fn lcg(seed: u64) -> impl FnMut(i64, i64) -> i64 {
        let mut state = seed;
        move |lo, hi| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            lo + ((state >> 33) % ((hi - lo + 1) as u64)) as i64
        }
    }

    #[test]
    fn sides_have_the_drawn_slope() {
        let mut s = lcg(7);
        let alpha = [0, 3, 7];
        let param = StabilityParameter::from_free_ints(&[3, 7]);
        for _ in 0..200 {
            if let Some(t) = draw_side(&alpha, 4, &mut s) {
                assert_eq!(alpha_slope(&t, &param).unwrap(), int(4));
            }
        }
    }

    #[test]
    fn short_sweep_passes() {
        let mut s = lcg(11);
        let report = chi_screening(60, 100_000, &mut s).unwrap();
        assert_eq!(report.accepted, 60);
        assert!(report.passed(), "{:?}", report.violations);
    }
}
