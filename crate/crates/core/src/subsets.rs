//! Subset enumeration over bitmasks.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the number of enumerated indices (2^30 subsets).
pub const DEFAULT_MAX_K: usize = 30;

/// The enumeration cap, overridable through `COVSUM_MAX_K`.
pub fn max_k() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| match std::env::var("COVSUM_MAX_K") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(cap) if cap <= 62 => {
                eprintln!("warning: COVSUM_MAX_K={cap} overrides the default enumeration cap of {DEFAULT_MAX_K}");
                cap
            }
            _ => {
                eprintln!("warning: ignoring invalid COVSUM_MAX_K={v:?}");
                DEFAULT_MAX_K
            }
        },
        Err(_) => DEFAULT_MAX_K,
    })
}

pub fn check_cap(k: usize, cap: usize) -> Result<()> {
    if k > cap {
        return Err(Error::Cap { what: "enumeration size", cap: cap as u64, got: k as u64 });
    }
    Ok(())
}

/// One step of a reflected Gray code walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrayStep {
    pub mask: u64,
    /// Bit that changed to reach `mask`, and whether it was switched on.
    pub flip: Option<(usize, bool)>,
}

/// Visits all `2^k` masks so that consecutive masks differ in one bit,
/// starting from the empty set.
#[derive(Clone, Debug)]
pub struct GrayCode {
    k: usize,
    index: u64,
    mask: u64,
}

impl GrayCode {
    pub fn new(k: usize) -> Self {
        assert!(k < 64);
        GrayCode { k, index: 0, mask: 0 }
    }
}

impl Iterator for GrayCode {
    type Item = GrayStep;

    fn next(&mut self) -> Option<GrayStep> {
        if self.index >> self.k != 0 {
            return None;
        }
        let step = if self.index == 0 {
            GrayStep { mask: 0, flip: None }
        } else {
            let bit = self.index.trailing_zeros() as usize;
            self.mask ^= 1 << bit;
            GrayStep { mask: self.mask, flip: Some((bit, self.mask >> bit & 1 == 1)) }
        };
        self.index += 1;
        Some(step)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = ((1u64 << self.k) - self.index) as usize;
        (left, Some(left))
    }
}

/// Masks over `k` bits with exactly `r` bits set, in increasing order
/// (Gosper's hack).
pub fn masks_of_size(k: usize, r: usize) -> impl Iterator<Item = u64> {
    assert!(k < 64);
    let limit = 1u64 << k;
    let mut cur = if r > k { limit } else if r == 0 { 0 } else { (1u64 << r) - 1 };
    let mut done = r > k;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let ripple = cur + c;
            cur = (((ripple ^ cur) >> 2) / c) | ripple;
            if cur >= limit {
                done = true;
            }
        }
        Some(out)
    })
}

/// Expands a mask over positions of `indices` into a mask over the full
/// index range.
pub fn lift_mask(sub: u64, indices: &[usize]) -> u64 {
    indices
        .iter()
        .enumerate()
        .filter(|(i, _)| sub >> i & 1 == 1)
        .fold(0u64, |acc, (_, &s)| acc | 1 << s)
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |acc, &s| acc | 1 << s)
}

pub fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gray_code_visits_every_mask_once() {
        for k in 0..10 {
            let steps: Vec<_> = GrayCode::new(k).collect();
            assert_eq!(steps.len(), 1 << k);
            let mut seen: Vec<u64> = steps.iter().map(|s| s.mask).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), 1 << k);
            for w in steps.windows(2) {
                let (bit, on) = w[1].flip.unwrap();
                assert_eq!(w[0].mask ^ w[1].mask, 1 << bit);
                assert_eq!(on, w[1].mask >> bit & 1 == 1);
            }
        }
    }

    #[test]
    fn fixed_size_masks() {
        let all: Vec<u64> = masks_of_size(5, 2).collect();
        assert_eq!(all.len(), 10);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|m| m.count_ones() == 2));
        assert_eq!(masks_of_size(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_of_size(3, 3).collect::<Vec<_>>(), vec![7]);
        assert_eq!(masks_of_size(3, 4).count(), 0);
    }

    #[test]
    fn lifting() {
        assert_eq!(lift_mask(0b101, &[1, 4, 6]), (1 << 1) | (1 << 6));
        assert_eq!(indices_of(0b1010), vec![1, 3]);
        assert_eq!(mask_of(&[0, 2]), 0b101);
    }
}
