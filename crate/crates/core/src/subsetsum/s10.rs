use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::numtheory::binomial;
use crate::arith::Rational;
use crate::error::{Error, Result, ViolationCode};
use crate::residue::AugmentedSystem;

use super::checks::progression_denom;
use super::kernel::{Strategy, Weights};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S10Row {
    pub a: u64,
    /// `|{I : Σ_{s∈I} 1/n_s = a/n_0}|`.
    pub count: u64,
    /// `C(m−1, ⌊a/n_0⌋)`.
    #[serde(serialize_with = "crate::subsetsum::serialize_display")]
    pub bound: BigInt,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct S10Report {
    pub m: u64,
    pub n0: u64,
    pub reciprocal_sum: Rational,
    pub rows: Vec<S10Row>,
    pub holds: bool,
}

/// Histogram of `n_0·Σ_{s∈I} 1/n_s` over the subsets where it is an integer.
fn histogram(system: &AugmentedSystem, strategy: Strategy) -> Result<Vec<u64>> {
    let k = system.tail.len();
    let n0 = system.a0.modulus();
    let denom = progression_denom(&system.tail, n0)?;
    let weights = Weights::new(&system.tail.moduli(), &vec![1; k], Some(denom))?;
    let step = denom / n0;
    let top = (k as u64 * denom / step) as usize;
    let mut hist = vec![0u64; top + 1];
    match strategy {
        Strategy::Optimized => weights.gray_walk(|_, total| {
            if (total as u64).is_multiple_of(step) {
                hist[(total as u64 / step) as usize] += 1;
            }
        })?,
        Strategy::Naive => {
            for mask in 0..1u64 << k {
                let a = weights.exact_sum(mask) * Rational::from(n0 as i64);
                if a.is_integer() {
                    let a: u64 = a.floor().try_into().expect("nonnegative");
                    hist[a as usize] += 1;
                }
            }
        }
    }
    Ok(hist)
}

/// Checks the counting lower bound for every `a` with
/// `a/n_0 ≤ Σ_s 1/n_s`. `m` defaults to `m(A_0)`.
pub fn count_unit_fraction_subsets(system: &AugmentedSystem, m: Option<u64>, strategy: Strategy) -> Result<S10Report> {
    let full = system.full()?;
    let m = m.unwrap_or_else(|| full.covering_multiplicity());
    if m == 0 || !full.is_m_cover(m) {
        return Err(Error::violation(
            ViolationCode::NotMCover,
            format!("A_0 is not a {m}-cover (multiplicity {})", full.covering_multiplicity()),
        ));
    }
    let n0 = system.a0.modulus();
    let reciprocal_sum = system
        .tail
        .moduli()
        .into_iter()
        .fold(Rational::zero(), |acc, n| acc + Rational::new(1, n));
    if reciprocal_sum >= m as i64 {
        return Err(Error::violation(
            ViolationCode::ReciprocalSumTooLarge,
            format!("Σ 1/n_s = {reciprocal_sum} is not below m = {m}"),
        ));
    }
    let hist = histogram(system, strategy)?;
    let last: u64 = (reciprocal_sum.clone() * Rational::from(n0 as i64)).floor().try_into().expect("nonnegative");
    let rows: Vec<S10Row> = (0..=last)
        .map(|a| {
            let count = hist.get(a as usize).copied().unwrap_or(0);
            let bound = binomial(m - 1, a / n0);
            S10Row { a, count, holds: BigInt::from(count) >= bound, bound }
        })
        .collect();
    Ok(S10Report { m, n0, reciprocal_sum, holds: rows.iter().all(|r| r.holds), rows })
}
