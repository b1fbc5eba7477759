use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::arith::numtheory::{checked_lcm, gcd};
use crate::arith::Rational;
use crate::error::{Error, Result, ViolationCode};
use crate::residue::{CoverSystem, PERIOD_CAP};
use crate::subsets::{check_cap, indices_of, max_k, GrayCode};

/// Which enumeration path a verifier takes. `Naive` recomputes every subset
/// sum from scratch with big rationals and exists to cross-check `Optimized`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Optimized,
    Naive,
}

/// The weights `m_s/n_s` scaled to integers `m_s·N/n_s` over a common
/// denominator `N`.
#[derive(Clone, Debug)]
pub struct Weights {
    denom: u64,
    scaled: Vec<i128>,
    moduli: Vec<u64>,
    multipliers: Vec<i64>,
}

impl Weights {
    /// `denom` defaults to the lcm of the moduli; a supplied value must be a
    /// multiple of it.
    pub fn new(moduli: &[u64], multipliers: &[i64], denom: Option<u64>) -> Result<Self> {
        if moduli.len() != multipliers.len() {
            return Err(Error::violation(
                ViolationCode::LengthMismatch,
                format!("{} classes but {} multipliers", moduli.len(), multipliers.len()),
            ));
        }
        let mut lcm = 1u64;
        for &n in moduli {
            lcm = checked_lcm(lcm, n)
                .filter(|&l| l <= PERIOD_CAP)
                .ok_or(Error::Cap { what: "lcm of moduli", cap: PERIOD_CAP, got: u64::MAX })?;
        }
        let denom = match denom {
            Some(d) if d == 0 || d % lcm != 0 => {
                return Err(Error::invalid(format!("denominator {d} is not a multiple of {lcm}")))
            }
            Some(d) => d,
            None => lcm,
        };
        let scaled = moduli
            .iter()
            .zip(multipliers)
            .map(|(&n, &m)| m as i128 * (denom / n) as i128)
            .collect();
        Ok(Weights { denom, scaled, moduli: moduli.to_vec(), multipliers: multipliers.to_vec() })
    }

    pub fn for_system(system: &CoverSystem, multipliers: &[i64]) -> Result<Self> {
        Self::new(&system.moduli(), multipliers, None)
    }

    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    pub fn scaled(&self, s: usize) -> i128 {
        self.scaled[s]
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn multipliers(&self) -> &[i64] {
        &self.multipliers
    }

    /// Fails with `multiplier-not-coprime` on the first `gcd(m_s, n_s) ≠ 1`.
    pub fn require_coprime(&self) -> Result<()> {
        for (s, (&n, &m)) in self.moduli.iter().zip(&self.multipliers).enumerate() {
            if gcd(m as i128, n as i128) != 1 {
                return Err(Error::violation(
                    ViolationCode::MultiplierNotCoprime,
                    format!("gcd(m_{0}, n_{0}) = gcd({m}, {n}) != 1", s + 1),
                ));
            }
        }
        Ok(())
    }

    pub fn all_coprime(&self) -> bool {
        self.require_coprime().is_ok()
    }

    /// Numerator over `denom` of the fractional part of a scaled sum.
    pub fn frac_num(&self, total: i128) -> u64 {
        total.rem_euclid(self.denom as i128) as u64
    }

    pub fn scaled_sum(&self, mask: u64) -> i128 {
        indices_of(mask).into_iter().map(|s| self.scaled[s]).sum()
    }

    /// `Σ_{s∈I} m_s/n_s` recomputed with big rationals.
    pub fn exact_sum(&self, mask: u64) -> Rational {
        indices_of(mask)
            .into_iter()
            .fold(Rational::zero(), |acc, s| acc + Rational::new(self.multipliers[s], self.moduli[s]))
    }

    /// Numerator over `denom` of `{Σ_{s∈I} m_s/n_s}`, via the exact sum.
    pub fn frac_num_naive(&self, mask: u64) -> u64 {
        let scaled = self.exact_sum(mask).frac_part() * Rational::from(self.denom as i64);
        assert!(scaled.is_integer(), "denominator divides the common modulus");
        scaled.floor().try_into().expect("fits in u64")
    }

    pub fn record(&self, mask: u64) -> SubsetRecord {
        let total = self.scaled_sum(mask);
        SubsetRecord {
            mask,
            frac: Rational::new(self.frac_num(total), self.denom),
            whole: BigInt::from(total.div_euclid(self.denom as i128)),
            size: mask.count_ones(),
            aux: None,
        }
    }

    pub fn record_naive(&self, mask: u64) -> SubsetRecord {
        let sum = self.exact_sum(mask);
        SubsetRecord { mask, frac: sum.frac_part(), whole: sum.floor(), size: mask.count_ones(), aux: None }
    }

    /// Walks all subsets of `[0, len)` in Gray-code order, handing the mask
    /// and the running scaled sum to `visit`.
    pub fn gray_walk(&self, mut visit: impl FnMut(u64, i128)) -> Result<()> {
        check_cap(self.len(), max_k())?;
        let mut total = 0i128;
        for step in GrayCode::new(self.len()) {
            if let Some((bit, on)) = step.flip {
                total += if on { self.scaled[bit] } else { -self.scaled[bit] };
            }
            visit(step.mask, total);
        }
        Ok(())
    }
}

/// One subset with its fractional and integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetRecord {
    pub mask: u64,
    pub frac: Rational,
    pub whole: BigInt,
    pub size: u32,
    /// A side value such as `Σ_{s∈I} c_s`, already encoded.
    pub aux: Option<serde_json::Value>,
}

impl Serialize for SubsetRecord {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let subset: Vec<usize> = indices_of(self.mask).into_iter().map(|s| s + 1).collect();
        let mut st = ser.serialize_struct("SubsetRecord", 6)?;
        st.serialize_field("subset", &subset)?;
        st.serialize_field("mask", &self.mask)?;
        st.serialize_field("frac", &self.frac)?;
        st.serialize_field("whole", &self.whole.to_string())?;
        st.serialize_field("size", &self.size)?;
        if let Some(aux) = &self.aux {
            st.serialize_field("aux", aux)?;
        }
        st.end()
    }
}

/// Groups the subsets accepted by `filter` by fractional part. Keys ascend;
/// records within a key are ordered by mask.
pub fn fractional_spectrum(
    system: &CoverSystem,
    multipliers: &[i64],
    filter: impl Fn(u64) -> bool,
    strategy: Strategy,
) -> Result<BTreeMap<Rational, Vec<SubsetRecord>>> {
    let w = Weights::for_system(system, multipliers)?;
    w.require_coprime()?;
    check_cap(w.len(), max_k())?;
    let mut out: BTreeMap<Rational, Vec<SubsetRecord>> = BTreeMap::new();
    match strategy {
        Strategy::Optimized => {
            let mut buckets: Vec<Vec<(u64, i128)>> = vec![Vec::new(); w.denom() as usize];
            w.gray_walk(|mask, total| {
                if filter(mask) {
                    buckets[w.frac_num(total) as usize].push((mask, total));
                }
            })?;
            for (v, mut items) in buckets.into_iter().enumerate() {
                if items.is_empty() {
                    continue;
                }
                items.sort_unstable_by_key(|&(m, _)| m);
                let frac = Rational::new(v as u64, w.denom());
                let records = items
                    .into_iter()
                    .map(|(mask, total)| SubsetRecord {
                        mask,
                        frac: frac.clone(),
                        whole: BigInt::from(total.div_euclid(w.denom() as i128)),
                        size: mask.count_ones(),
                        aux: None,
                    })
                    .collect();
                out.insert(frac, records);
            }
        }
        Strategy::Naive => {
            for mask in 0..1u64 << w.len() {
                if filter(mask) {
                    let rec = w.record_naive(mask);
                    out.entry(rec.frac.clone()).or_default().push(rec);
                }
            }
        }
    }
    Ok(out)
}
