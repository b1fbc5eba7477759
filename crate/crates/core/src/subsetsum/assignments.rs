//! Enumeration of assignments `x_s ∈ {b_s, c_s}` bucketed by the fractional
//! part of `Σ_{x_s ≠ b_s} m_s/n_s`, keeping the distinct values of `Σ x_s`.

use std::collections::HashMap;

use crate::arith::Ring;
use crate::error::Result;
use crate::subsets::{check_cap, lift_mask, max_k, GrayCode};

use super::kernel::{Strategy, Weights};
use super::progression::progression_numerators;

pub(crate) struct AssignmentTable<E> {
    pub denom: u64,
    /// Per numerator over `denom`: attained sums, each with the least mask
    /// (bits = indices with `x_s = c_s`) attaining it.
    pub sets: Vec<HashMap<E, u64>>,
    pub visited: u64,
    pub accepted: u64,
}

impl<E: Eq + std::hash::Hash> AssignmentTable<E> {
    fn insert(&mut self, v: u64, sum: E, mask: u64) {
        self.accepted += 1;
        self.sets[v as usize]
            .entry(sum)
            .and_modify(|m| *m = (*m).min(mask))
            .or_insert(mask);
    }

    pub fn size(&self, v: u64) -> usize {
        self.sets[v as usize].len()
    }

    pub fn least_mask(&self, v: u64) -> Option<u64> {
        self.sets[v as usize].values().copied().min()
    }
}

/// Indices with `b_s ≠ c_s`; only these are enumerated.
pub(crate) fn active_indices<E: PartialEq>(pairs: &[(E, E)]) -> Vec<usize> {
    pairs.iter().enumerate().filter(|(_, (b, c))| b != c).map(|(s, _)| s).collect()
}

pub(crate) fn tabulate<F: Ring>(
    field: &F,
    weights: &Weights,
    pairs: &[(F::Elem, F::Elem)],
    accept: impl Fn(&[F::Elem]) -> bool,
    strategy: Strategy,
) -> Result<AssignmentTable<F::Elem>> {
    let active = active_indices(pairs);
    check_cap(active.len(), max_k())?;
    let mut table = AssignmentTable {
        denom: weights.denom(),
        sets: vec![HashMap::new(); weights.denom() as usize],
        visited: 0,
        accepted: 0,
    };
    let base: Vec<F::Elem> = pairs.iter().map(|(b, _)| b.clone()).collect();
    match strategy {
        Strategy::Optimized => {
            let deltas: Vec<F::Elem> = pairs.iter().map(|(b, c)| field.sub(c, b)).collect();
            let mut point = base.clone();
            let mut sum = field.sum(&base);
            let mut total = 0i128;
            for step in GrayCode::new(active.len()) {
                if let Some((bit, on)) = step.flip {
                    let s = active[bit];
                    let (b, c) = &pairs[s];
                    if on {
                        point[s] = c.clone();
                        sum = field.add(&sum, &deltas[s]);
                        total += weights.scaled(s);
                    } else {
                        point[s] = b.clone();
                        sum = field.sub(&sum, &deltas[s]);
                        total -= weights.scaled(s);
                    }
                }
                table.visited += 1;
                if accept(&point) {
                    table.insert(weights.frac_num(total), sum.clone(), lift_mask(step.mask, &active));
                }
            }
        }
        Strategy::Naive => {
            for sub in 0..1u64 << active.len() {
                let mask = lift_mask(sub, &active);
                let point: Vec<F::Elem> = pairs
                    .iter()
                    .enumerate()
                    .map(|(s, (b, c))| if mask >> s & 1 == 1 { c.clone() } else { b.clone() })
                    .collect();
                table.visited += 1;
                if accept(&point) {
                    let sum = field.sum(&point);
                    table.insert(weights.frac_num_naive(mask), sum, mask);
                }
            }
        }
    }
    Ok(table)
}

/// The least offset whose progression has every `|S_r| ≥ bound`; failing
/// that, the least offset maximising `min_r |S_r|`.
pub(crate) struct OffsetChoice {
    pub t: u64,
    pub sizes: Vec<usize>,
    pub holds: bool,
}

pub(crate) fn choose_offset(n0: u64, denom: u64, bound: usize, size: impl Fn(u64) -> usize) -> OffsetChoice {
    let mut best: Option<(usize, u64, Vec<usize>)> = None;
    for t in 0..denom / n0 {
        let sizes: Vec<usize> = progression_numerators(t, n0, denom).map(&size).collect();
        let low = sizes.iter().copied().min().unwrap_or(0);
        if low >= bound {
            return OffsetChoice { t, sizes, holds: true };
        }
        if best.as_ref().is_none_or(|(b, _, _)| low > *b) {
            best = Some((low, t, sizes));
        }
    }
    let (_, t, sizes) = best.expect("at least one candidate offset");
    OffsetChoice { t, sizes, holds: false }
}
