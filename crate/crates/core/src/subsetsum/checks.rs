//! Hypothesis checks shared by the verifiers.

use crate::arith::numtheory::checked_lcm;
use crate::error::{Error, Result, ViolationCode};
use crate::residue::{AugmentedSystem, CoverSystem, PERIOD_CAP};

pub(crate) fn same_len(what: &str, got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(Error::violation(
            ViolationCode::LengthMismatch,
            format!("{what}: expected {expected} entries, got {got}"),
        ));
    }
    Ok(())
}

/// Fails when `p > 0` divides one of `moduli`.
pub(crate) fn characteristic_coprime(p: u64, moduli: &[u64]) -> Result<()> {
    if p == 0 {
        return Ok(());
    }
    if let Some(n) = moduli.iter().find(|&&n| n % p == 0) {
        return Err(Error::violation(
            ViolationCode::CharacteristicDividesModulus,
            format!("characteristic {p} divides the modulus {n}"),
        ));
    }
    Ok(())
}

/// Common denominator for fractional parts and progressions of step `1/n_0`.
pub(crate) fn progression_denom(system: &CoverSystem, n0: u64) -> Result<u64> {
    checked_lcm(system.period(), n0)
        .filter(|&l| l <= PERIOD_CAP)
        .ok_or(Error::Cap { what: "lcm of moduli", cap: PERIOD_CAP, got: u64::MAX })
}

/// `m(A_0)` after checking that it is positive.
pub(crate) fn positive_multiplicity(full: &CoverSystem) -> Result<u64> {
    let m = full.covering_multiplicity();
    if m == 0 {
        return Err(Error::violation(ViolationCode::NotMCover, "the system does not cover every integer"));
    }
    Ok(m)
}

/// `a_0(n_0)` must be essential in the `m`-cover `A_0`.
pub(crate) fn a0_essential(sys: &AugmentedSystem, m: u64) -> Result<CoverSystem> {
    let full = sys.full()?;
    if !full.is_m_cover(m) {
        return Err(Error::violation(
            ViolationCode::NotMCover,
            format!("A_0 is not a {m}-cover (multiplicity {})", full.covering_multiplicity()),
        ));
    }
    if !full.is_essential(0, m)? {
        return Err(Error::violation(ViolationCode::NotEssential, format!("{} is not essential", sys.a0)));
    }
    Ok(full)
}
