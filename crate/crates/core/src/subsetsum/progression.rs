use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};

use super::SubsetRecord;

/// A full progression `{(α + r)/n_0 : r < n_0}` of fractional parts with one
/// witness per term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionWitness {
    pub alpha: Rational,
    pub n0: u64,
    pub witnesses: Vec<SubsetRecord>,
}

/// Least `t ∈ [0, N/n_0)` such that every numerator `t + r·N/n_0` passes
/// `present`. `α = t·n_0/N`.
pub fn least_progression_offset(n0: u64, denom: u64, present: impl Fn(u64) -> bool) -> Option<u64> {
    debug_assert!(n0 > 0 && denom.is_multiple_of(n0));
    let step = denom / n0;
    (0..step).find(|&t| (0..n0).all(|r| present(t + r * step)))
}

/// Values of the progression with offset `t`, as numerators over `denom`.
pub fn progression_numerators(t: u64, n0: u64, denom: u64) -> impl Iterator<Item = u64> {
    let step = denom / n0;
    (0..n0).map(move |r| t + r * step)
}

pub fn alpha_of(t: u64, n0: u64, denom: u64) -> Rational {
    Rational::new(t * n0, denom)
}

/// Least `α` among the candidates `t·n_0/N` whose progression
/// `{(α + r)/n_0 mod 1}` lies inside `keys`.
pub fn find_progression(keys: &BTreeSet<Rational>, n0: u64, denom: u64) -> Result<Option<Rational>> {
    if n0 == 0 || denom == 0 || !denom.is_multiple_of(n0) {
        return Err(Error::invalid(format!("n0 = {n0} does not divide N = {denom}")));
    }
    let big_denom = Rational::from(denom as i64);
    let mut nums = vec![false; denom as usize];
    for k in keys {
        let scaled = k.frac_part() * big_denom.clone();
        if !scaled.is_integer() {
            return Err(Error::invalid(format!("key {k} does not have denominator dividing {denom}")));
        }
        let v: u64 = scaled.floor().try_into().expect("numerator below N");
        nums[v as usize] = true;
    }
    Ok(least_progression_offset(n0, denom, |v| nums[v as usize]).map(|t| alpha_of(t, n0, denom)))
}
