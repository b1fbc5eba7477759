//! Zero-sum congruences over abelian `p`-groups `ℤ_{p^{h_1}} ⊕ … ⊕ ℤ_{p^{h_l}}`.
//!
//! The signed count of zero-sum subsets (with prescribed targets) is
//! congruent mod `p` to a sum of products over exact ordered partitions of
//! the index set. Both sides are computed independently here; the
//! specialisations (the `|I| = p^h − 1` count and the Kemnitz-type
//! congruence in `ℤ_q²`) are built on the same scans.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::arith::numtheory::{is_prime, prime_power};
use crate::error::{Error, Result, ViolationCode};
use crate::subsets::{check_cap, masks_of_size, GrayCode};
use crate::subsetsum::Strategy;

/// Largest `k` for which the subset scans run.
pub const ZERO_SUM_MAX_K: usize = 26;

/// Largest `p^h` accepted by [`cor33_ii_check`].
pub const COR33_MAX_Q: u64 = 9;

/// Largest `q` accepted by [`kemnitz_congruence`].
pub const KEMNITZ_MAX_Q: u64 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroSumInstance {
    pub p: u64,
    pub h: Vec<u32>,
    /// `k × l` matrix; row `s` holds `c_{s1}, …, c_{sl}`.
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    pub targets: Vec<i64>,
}

impl ZeroSumInstance {
    pub fn k(&self) -> usize {
        self.c.len()
    }

    pub fn l(&self) -> usize {
        self.h.len()
    }

    /// `p^{h_t}` for each column.
    pub fn moduli(&self) -> Vec<i64> {
        self.h.iter().map(|&h| (self.p as i64).pow(h)).collect()
    }

    /// `Σ_t (p^{h_t} − 1)`.
    pub fn threshold(&self) -> usize {
        self.moduli().iter().map(|&q| q as usize - 1).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p) {
            return Err(Error::violation(ViolationCode::NotPrime, format!("{} is not prime", self.p)));
        }
        if self.h.is_empty() {
            return Err(Error::violation(ViolationCode::OutOfRange, "at least one column is required"));
        }
        for &h in &self.h {
            let fits = h >= 1 && (self.p as u128).checked_pow(h).is_some_and(|q| q <= 1 << 31);
            if !fits {
                return Err(Error::violation(ViolationCode::OutOfRange, format!("exponent {h} is out of range")));
            }
        }
        if self.targets.len() != self.l() {
            return Err(Error::violation(
                ViolationCode::LengthMismatch,
                format!("{} targets for {} columns", self.targets.len(), self.l()),
            ));
        }
        if let Some(row) = self.c.iter().position(|r| r.len() != self.l()) {
            return Err(Error::violation(
                ViolationCode::LengthMismatch,
                format!("row {} has {} entries, expected {}", row + 1, self.c[row].len(), self.l()),
            ));
        }
        if self.k() < self.threshold() {
            return Err(Error::violation(
                ViolationCode::BelowThreshold,
                format!("k = {} is below Σ(p^h_t − 1) = {}", self.k(), self.threshold()),
            ));
        }
        Ok(())
    }

    /// Random instance with `k` rows and entries in `(−2q, 2q)`, `q` the
    /// largest modulus.
    pub fn random<G: Rng + ?Sized>(rng: &mut G, p: u64, h: &[u32], k: usize) -> ZeroSumInstance {
        let span = 2 * h.iter().map(|&h| (p as i64).pow(h)).max().unwrap_or(1);
        let mut entry = || rng.gen_range(-span + 1..span);
        let c = (0..k).map(|_| h.iter().map(|_| entry()).collect()).collect();
        let targets = h.iter().map(|_| entry()).collect();
        ZeroSumInstance { p, h: h.to_vec(), c, targets }
    }
}

/// `Σ_{I} (−1)^{|I|}` over the `I ⊆ [1,k]` with `p^{h_t} | Σ_{s∈I} c_{st} − c_t`
/// for every `t`, reduced mod `p`.
pub fn thm32_lhs(inst: &ZeroSumInstance, strategy: Strategy) -> Result<u64> {
    inst.validate()?;
    let k = inst.k();
    check_cap(k, ZERO_SUM_MAX_K)?;
    let moduli = inst.moduli();
    let qualifies = |sums: &[i64]| sums.iter().zip(&inst.targets).zip(&moduli).all(|((s, c), q)| (s - c) % q == 0);
    let mut signed: i64 = 0;
    match strategy {
        Strategy::Optimized => {
            let mut sums = vec![0i64; inst.l()];
            for step in GrayCode::new(k) {
                if let Some((s, on)) = step.flip {
                    for (t, sum) in sums.iter_mut().enumerate() {
                        let d = if on { inst.c[s][t] } else { -inst.c[s][t] };
                        *sum = (*sum + d).rem_euclid(moduli[t]);
                    }
                }
                if qualifies(&sums) {
                    signed += if step.mask.count_ones() % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        Strategy::Naive => {
            for mask in 0..1u64 << k {
                let sums: Vec<i64> = (0..inst.l())
                    .map(|t| (0..k).filter(|s| mask >> s & 1 == 1).map(|s| inst.c[s][t]).sum())
                    .collect();
                if qualifies(&sums) {
                    signed += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                }
            }
        }
    }
    Ok(signed.rem_euclid(inst.p as i64) as u64)
}

/// `Σ ∏_t ∏_{s∈I_t} c_{st}` over ordered partitions `I_1 ∪ … ∪ I_l = [1,k]`
/// with `|I_t| = p^{h_t} − 1`, reduced mod `p`. Zero unless `k` equals the
/// threshold.
///
/// `Optimized` runs a dynamic programme over the vector of part sizes filled
/// so far; `Naive` enumerates all `l^k` assignments of rows to parts.
pub fn thm32_rhs(inst: &ZeroSumInstance, strategy: Strategy) -> Result<u64> {
    inst.validate()?;
    let k = inst.k();
    check_cap(k, ZERO_SUM_MAX_K)?;
    if k != inst.threshold() {
        return Ok(0);
    }
    let p = inst.p;
    let l = inst.l();
    let sizes: Vec<usize> = inst.moduli().iter().map(|&q| q as usize - 1).collect();
    let entry = |s: usize, t: usize| inst.c[s][t].rem_euclid(p as i64) as u64;
    match strategy {
        Strategy::Optimized => {
            // State index in mixed radix (sizes[t] + 1); after s rows the
            // filled counts sum to s.
            let radix: Vec<usize> = sizes.iter().map(|&n| n + 1).collect();
            let states: usize = radix.iter().product();
            let mut stride = vec![1usize; l];
            for t in 1..l {
                stride[t] = stride[t - 1] * radix[t - 1];
            }
            let mut dp = vec![0u64; states];
            dp[0] = 1;
            for s in 0..k {
                let mut next = vec![0u64; states];
                for (state, &v) in dp.iter().enumerate() {
                    if v == 0 {
                        continue;
                    }
                    for t in 0..l {
                        if state / stride[t] % radix[t] < sizes[t] {
                            let to = state + stride[t];
                            next[to] = (next[to] + v * entry(s, t)) % p;
                        }
                    }
                }
                dp = next;
            }
            Ok(dp[states - 1])
        }
        Strategy::Naive => {
            let total = (l as u128).checked_pow(k as u32).filter(|&n| n <= 1 << ZERO_SUM_MAX_K);
            let Some(total) = total else {
                return Err(Error::Cap { what: "row-to-part assignments", cap: 1 << ZERO_SUM_MAX_K, got: u64::MAX });
            };
            let mut acc = 0u64;
            for code in 0..total as u64 {
                let mut counts = vec![0usize; l];
                let mut product = 1u64;
                let mut rest = code;
                for s in 0..k {
                    let t = (rest % l as u64) as usize;
                    rest /= l as u64;
                    counts[t] += 1;
                    product = product * entry(s, t) % p;
                }
                if counts == sizes {
                    acc = (acc + product) % p;
                }
            }
            Ok(acc)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm32Report {
    pub p: u64,
    pub k: usize,
    pub threshold: usize,
    pub lhs: u64,
    pub rhs: u64,
    /// `k` exceeds the threshold, so the right side is an empty sum.
    pub olson: bool,
    pub holds: bool,
}

pub fn verify_thm32(inst: &ZeroSumInstance, strategy: Strategy) -> Result<Thm32Report> {
    let lhs = thm32_lhs(inst, strategy)?;
    let rhs = thm32_rhs(inst, strategy)?;
    let threshold = inst.threshold();
    Ok(Thm32Report { p: inst.p, k: inst.k(), threshold, lhs, rhs, olson: inst.k() > threshold, holds: lhs == rhs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor33Report {
    pub p: u64,
    pub h: u32,
    /// `|{I : |I| = p^h − 1, p^h | Σ_{s∈I} c_s − c}|`.
    pub count: u64,
    /// `[x^{p^h−1}] ∏_s (x − c_s)`.
    #[serde(serialize_with = "crate::subsetsum::serialize_display")]
    pub coefficient: BigInt,
    pub count_mod_p: u64,
    pub coefficient_mod_p: u64,
    pub holds: bool,
}

/// Coefficients of `∏ (x − c_s)`, lowest degree first.
fn expand_linear_factors(c: &[i64]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &cs in c {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * cs;
        }
        poly = next;
    }
    poly
}

fn reduce_big(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    u64::try_from(r).expect("residue fits")
}

/// Compares the count of `(p^h − 1)`-subsets of `c` summing to `target`
/// mod `p^h` with the middle coefficient of `∏ (x − c_s)`, both mod `p`.
pub fn cor33_ii_check(p: u64, h: u32, c: &[i64], target: i64, strategy: Strategy) -> Result<Cor33Report> {
    if !is_prime(p) {
        return Err(Error::violation(ViolationCode::NotPrime, format!("{p} is not prime")));
    }
    let q = p.checked_pow(h).filter(|_| h >= 1);
    let q = match q {
        Some(q) if q <= COR33_MAX_Q => q,
        _ => return Err(Error::Cap { what: "p^h", cap: COR33_MAX_Q, got: q.unwrap_or(u64::MAX) }),
    };
    let len = 2 * q as usize - 2;
    if c.len() != len {
        return Err(Error::violation(
            ViolationCode::LengthMismatch,
            format!("expected 2p^h − 2 = {len} values, got {}", c.len()),
        ));
    }
    let size = q as usize - 1;
    let hits = |mask: u64| {
        let sum: i64 = (0..len).filter(|s| mask >> s & 1 == 1).map(|s| c[s]).sum();
        (sum - target).rem_euclid(q as i64) == 0
    };
    let count = match strategy {
        Strategy::Optimized => masks_of_size(len, size).filter(|&m| hits(m)).count(),
        Strategy::Naive => (0..1u64 << len).filter(|m| m.count_ones() as usize == size && hits(*m)).count(),
    } as u64;
    let coefficient = expand_linear_factors(c).swap_remove(size);
    let count_mod_p = count % p;
    let coefficient_mod_p = reduce_big(&coefficient, p);
    Ok(Cor33Report { p, h, count, coefficient, count_mod_p, coefficient_mod_p, holds: count_mod_p == coefficient_mod_p })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KemnitzReport {
    pub q: u64,
    pub p: u64,
    /// Zero-sum subsets of size `q`.
    pub n_q: u64,
    /// Zero-sum subsets of size `3q`.
    pub n_3q: u64,
    /// `N_q ≡ N_{3q} + 2 (mod p)`.
    pub holds: bool,
}

/// Counts zero-sum subsets of sizes `q` and `3q` among `4q − 2` elements of
/// `ℤ_q²` and compares them mod `p`. A failure is reported through `holds`.
pub fn kemnitz_congruence(q: u64, c: &[(i64, i64)], strategy: Strategy) -> Result<KemnitzReport> {
    let Some((p, _)) = prime_power(q) else {
        return Err(Error::violation(ViolationCode::NotPrimePower, format!("{q} is not a prime power")));
    };
    if q > KEMNITZ_MAX_Q {
        return Err(Error::Cap { what: "Kemnitz modulus q", cap: KEMNITZ_MAX_Q, got: q });
    }
    let len = 4 * q as usize - 2;
    if c.len() != len {
        return Err(Error::violation(
            ViolationCode::LengthMismatch,
            format!("expected 4q − 2 = {len} pairs, got {}", c.len()),
        ));
    }
    let qi = q as i64;
    let pts: Vec<(i64, i64)> = c.iter().map(|&(a, b)| (a.rem_euclid(qi), b.rem_euclid(qi))).collect();
    let (small, large) = (q as u32, 3 * q as u32);
    let (mut n_q, mut n_3q) = (0u64, 0u64);
    match strategy {
        Strategy::Optimized => {
            let (mut x, mut y) = (0i64, 0i64);
            for step in GrayCode::new(len) {
                if let Some((s, on)) = step.flip {
                    let sign = if on { 1 } else { -1 };
                    x = (x + sign * pts[s].0).rem_euclid(qi);
                    y = (y + sign * pts[s].1).rem_euclid(qi);
                }
                if x == 0 && y == 0 {
                    match step.mask.count_ones() {
                        n if n == small => n_q += 1,
                        n if n == large => n_3q += 1,
                        _ => {}
                    }
                }
            }
        }
        Strategy::Naive => {
            let zero_sum = |mask: u64| {
                let (x, y) = (0..len)
                    .filter(|s| mask >> s & 1 == 1)
                    .fold((0, 0), |(x, y), s| (x + c[s].0, y + c[s].1));
                x % qi == 0 && y % qi == 0
            };
            n_q = masks_of_size(len, small as usize).filter(|&m| zero_sum(m)).count() as u64;
            n_3q = masks_of_size(len, large as usize).filter(|&m| zero_sum(m)).count() as u64;
        }
    }
    Ok(KemnitzReport { q, p, n_q, n_3q, holds: n_q % p == (n_3q + 2) % p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(p: u64, h: &[u32], c: &[&[i64]], targets: &[i64]) -> ZeroSumInstance {
        ZeroSumInstance { p, h: h.to_vec(), c: c.iter().map(|r| r.to_vec()).collect(), targets: targets.to_vec() }
    }

    fn both<T: PartialEq + std::fmt::Debug>(f: impl Fn(Strategy) -> T) -> T {
        let a = f(Strategy::Optimized);
        assert_eq!(a, f(Strategy::Naive));
        a
    }

    #[test]
    fn lhs_small_cases() {
        assert_eq!(both(|s| thm32_lhs(&inst(2, &[1], &[&[1]], &[0]), s).unwrap()), 1);
        assert_eq!(both(|s| thm32_lhs(&inst(3, &[1], &[&[1], &[2]], &[0]), s).unwrap()), 2);
        assert_eq!(both(|s| thm32_lhs(&inst(3, &[1], &[&[0], &[0], &[0]], &[0]), s).unwrap()), 0);
    }

    #[test]
    fn rhs_small_cases() {
        // l = 1, p = 3: c₁c₂.
        assert_eq!(both(|s| thm32_rhs(&inst(3, &[1], &[&[2], &[2]], &[0]), s).unwrap()), 1);
        // l = 2, p = 2: c11·c22 + c21·c12.
        let i = inst(2, &[1, 1], &[&[1, 1], &[1, 1]], &[0, 0]);
        assert_eq!(both(|s| thm32_rhs(&i, s).unwrap()), 0);
        let i = inst(2, &[1, 1], &[&[1, 0], &[1, 1]], &[0, 0]);
        assert_eq!(both(|s| thm32_rhs(&i, s).unwrap()), 1);
        // k above the threshold.
        assert_eq!(both(|s| thm32_rhs(&inst(2, &[1], &[&[1], &[1]], &[0]), s).unwrap()), 0);
    }

    #[test]
    fn all_zero_at_threshold() {
        let i = inst(3, &[1, 1], &[&[0, 0][..]; 4], &[0, 0]);
        let rep = both(|s| verify_thm32(&i, s).unwrap());
        assert_eq!((rep.lhs, rep.rhs, rep.holds), (0, 0, true));
    }

    #[test]
    fn below_threshold_rejected() {
        let err = thm32_lhs(&inst(3, &[2], &[&[1][..]; 7], &[0]), Strategy::Optimized).unwrap_err();
        assert_eq!(err.violation_code(), Some(ViolationCode::BelowThreshold));
    }

    #[test]
    fn json_schema() {
        let i: ZeroSumInstance = serde_json::from_str(r#"{"p":3,"h":[1,2],"C":[[1,2]],"targets":[0,1]}"#).unwrap();
        assert_eq!(i.c, vec![vec![1, 2]]);
        assert!(serde_json::to_string(&i).unwrap().contains("\"C\""));
    }

    #[test]
    fn cor33_small() {
        let rep = both(|s| cor33_ii_check(2, 1, &[3, 5], 1, s).unwrap());
        assert_eq!(rep.count, 2);
        assert_eq!(rep.coefficient, BigInt::from(-8));
        assert!(rep.holds);
        let rep = both(|s| cor33_ii_check(3, 1, &[0; 4], 0, s).unwrap());
        assert_eq!((rep.count, rep.coefficient_mod_p, rep.holds), (6, 0, true));
        let err = cor33_ii_check(2, 1, &[1, 2, 3], 0, Strategy::Optimized).unwrap_err();
        assert_eq!(err.violation_code(), Some(ViolationCode::LengthMismatch));
        assert!(matches!(cor33_ii_check(11, 1, &[0; 20], 0, Strategy::Optimized), Err(Error::Cap { .. })));
    }

    #[test]
    fn kemnitz_all_zero() {
        let rep = both(|s| kemnitz_congruence(2, &[(0, 0); 6], s).unwrap());
        assert_eq!((rep.n_q, rep.n_3q, rep.holds), (15, 1, true));
        assert!(matches!(kemnitz_congruence(5, &[(0, 0); 18], Strategy::Optimized), Err(Error::Cap { .. })));
        let err = kemnitz_congruence(6, &[], Strategy::Optimized).unwrap_err();
        assert_eq!(err.violation_code(), Some(ViolationCode::NotPrimePower));
    }
}
