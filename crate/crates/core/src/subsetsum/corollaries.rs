use serde::Serialize;

use crate::arith::{ElemCodec, Field, GaloisField, PrimeField, Rational, Ring};
use crate::error::{Error, Result, ViolationCode};
use crate::poly::{permanent, permanent_naive, rank};
use crate::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use crate::subsets::{check_cap, lift_mask, mask_of, max_k, GrayCode};

use super::assignments::{choose_offset, tabulate, AssignmentTable};
use super::checks::{a0_essential, characteristic_coprime, positive_multiplicity, progression_denom, same_len};
use super::kernel::{Strategy, SubsetRecord, Weights};
use super::progression::{alpha_of, least_progression_offset, progression_numerators, ProgressionWitness};

fn distinct_pairs<E: PartialEq>(x: &[(E, E)]) -> Result<()> {
    if let Some(s) = x.iter().position(|(b, c)| b == c) {
        return Err(Error::violation(ViolationCode::PairNotDistinct, format!("X_{} has a single element", s + 1)));
    }
    Ok(())
}

fn least_mask_progression<E>(
    table: &AssignmentTable<E>,
    weights: &Weights,
    n0: u64,
    keep: impl Fn(&AssignmentTable<E>, u64) -> Option<(u64, Option<serde_json::Value>)>,
) -> Option<ProgressionWitness> {
    let denom = table.denom;
    let t = least_progression_offset(n0, denom, |v| keep(table, v).is_some())?;
    let witnesses = progression_numerators(t, n0, denom)
        .map(|v| {
            let (mask, aux) = keep(table, v).expect("offset chosen with every term present");
            SubsetRecord { aux, ..weights.record(mask) }
        })
        .collect();
    Some(ProgressionWitness { alpha: alpha_of(t, n0, denom), n0, witnesses })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaZeroCheck {
    /// Whether the cited periodic-covering-function setting applies: `w_{A_0}`
    /// periodic mod `n_0`, all `m_s = 1`, `X_s = {0, 1/n_s}` over ℚ.
    pub applicable: bool,
    pub sizes: Vec<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor21Report {
    pub alpha: Rational,
    pub n0: u64,
    pub m: u64,
    /// `min{p′, m}`.
    pub bound: usize,
    pub sizes: Vec<usize>,
    pub witnesses: Vec<Option<SubsetRecord>>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_zero: Option<AlphaZeroCheck>,
}

/// Sets of `Σ x_s` over two-element `X_s`, bucketed by
/// `{Σ_{x_s = c_s} m_s/n_s}`; each bucket of a progression must reach
/// `min{p′, m}` with `m = m(A_0)`.
pub fn verify_cor21<F: Field + ElemCodec>(
    field: &F,
    system: &AugmentedSystem,
    multipliers: &[i64],
    x: &[(F::Elem, F::Elem)],
    assert_alpha_zero: bool,
    strategy: Strategy,
) -> Result<Cor21Report> {
    let k = system.tail.len();
    same_len("multipliers", multipliers.len(), k)?;
    same_len("pairs X_s", x.len(), k)?;
    Weights::for_system(&system.tail, multipliers)?.require_coprime()?;
    let full = system.full()?;
    let m = positive_multiplicity(&full)?;
    a0_essential(system, m)?;
    let p = field.characteristic();
    characteristic_coprime(p, &system.tail.moduli())?;
    distinct_pairs(x)?;

    let n0 = system.a0.modulus();
    let denom = progression_denom(&system.tail, n0)?;
    let weights = Weights::new(&system.tail.moduli(), multipliers, Some(denom))?;
    let table = tabulate(field, &weights, x, |_| true, strategy)?;
    let bound = if p == 0 { m } else { p.min(m) } as usize;
    let choice = choose_offset(n0, denom, bound, |v| table.size(v));

    let alpha_zero = assert_alpha_zero.then(|| {
        let sizes: Vec<usize> = progression_numerators(0, n0, denom).map(|v| table.size(v)).collect();
        let periodic = (0..full.period() as i64).all(|a| full.covering_function(a) == full.covering_function(a + n0 as i64));
        let specialised = p == 0
            && multipliers.iter().all(|&ms| ms == 1)
            && x.iter().zip(system.tail.moduli()).all(|((b, c), n)| {
                field.is_zero(b) && field.from_rational(&Rational::new(1, n)).as_ref() == Some(c)
            });
        AlphaZeroCheck { applicable: periodic && specialised, holds: sizes.iter().all(|&s| s >= m as usize), sizes }
    });

    Ok(Cor21Report {
        alpha: alpha_of(choice.t, n0, denom),
        n0,
        m,
        bound,
        witnesses: progression_numerators(choice.t, n0, denom)
            .map(|v| table.least_mask(v).map(|mk| weights.record(mk)))
            .collect(),
        sizes: choice.sizes,
        holds: choice.holds,
        alpha_zero,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub n0: u64,
    pub progression: Option<ProgressionWitness>,
}

/// For a `p`-cover with `a_0(n_0)` essential: the fractional parts of the
/// subsets with `Σ_{s∈I} c_s = c` in `ℤ_p` contain a full progression.
pub fn verify_cor22(
    system: &AugmentedSystem,
    multipliers: &[i64],
    p: u64,
    coeffs: &[u64],
    c: u64,
    strategy: Strategy,
) -> Result<ProgressionReport> {
    let field = PrimeField::new(p)
        .map_err(|_| Error::violation(ViolationCode::NotPrime, format!("{p} is not a supported prime")))?;
    let k = system.tail.len();
    same_len("multipliers", multipliers.len(), k)?;
    same_len("coefficients c_s", coeffs.len(), k)?;
    Weights::for_system(&system.tail, multipliers)?.require_coprime()?;
    a0_essential(system, p)?;
    characteristic_coprime(p, &system.tail.moduli())?;
    if let Some(s) = coeffs.iter().position(|&cs| cs % p == 0) {
        return Err(Error::violation(ViolationCode::ZeroCoefficient, format!("c_{} vanishes mod {p}", s + 1)));
    }
    let target = c % p;

    let n0 = system.a0.modulus();
    let denom = progression_denom(&system.tail, n0)?;
    let weights = Weights::new(&system.tail.moduli(), multipliers, Some(denom))?;
    let pairs: Vec<(u64, u64)> = coeffs.iter().map(|&cs| (0, cs % p)).collect();
    let table = tabulate(&field, &weights, &pairs, |_| true, strategy)?;
    let progression = least_mask_progression(&table, &weights, n0, |tb, v| {
        tb.sets[v as usize].get(&target).map(|&mk| (mk, Some(serde_json::json!(target))))
    });
    Ok(ProgressionReport { n0, progression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor23Report {
    pub n0: u64,
    pub permanent: serde_json::Value,
    pub progression: Option<ProgressionWitness>,
}

/// `A_0` an `(m+1)`-cover with `w(a_0) = m + 1`, `m` linear constraints
/// `Σ_j a_ij x_j ≠ b_i`; the fractional parts over `{s : x_s = c_s}` of the
/// admissible assignments contain a full progression.
pub fn verify_cor23<F: Field + ElemCodec>(
    field: &F,
    system: &AugmentedSystem,
    multipliers: &[i64],
    matrix: &[Vec<F::Elem>],
    b: &[F::Elem],
    x: &[(F::Elem, F::Elem)],
    strategy: Strategy,
) -> Result<Cor23Report> {
    let k = system.tail.len();
    same_len("multipliers", multipliers.len(), k)?;
    same_len("pairs X_s", x.len(), k)?;
    same_len("right-hand side b", b.len(), matrix.len())?;
    for row in matrix {
        same_len("matrix row", row.len(), k)?;
    }
    Weights::for_system(&system.tail, multipliers)?.require_coprime()?;
    let full = system.full()?;
    let total = positive_multiplicity(&full)?;
    let w = full.covering_function(system.a0_point()) as u64;
    if w != total {
        return Err(Error::violation(ViolationCode::A0NotMinimal, format!("w(a_0) = {w} but m(A_0) = {total}")));
    }
    if matrix.len() as u64 != total - 1 {
        return Err(Error::violation(
            ViolationCode::RowCount,
            format!("A_0 is a {total}-cover, so {} constraints are required, got {}", total - 1, matrix.len()),
        ));
    }
    characteristic_coprime(field.characteristic(), &system.tail.moduli())?;
    distinct_pairs(x)?;
    let j = system.tail_indices_containing_a0();
    let minor: Vec<Vec<F::Elem>> = matrix.iter().map(|row| j.iter().map(|&s| row[s].clone()).collect()).collect();
    let per = match strategy {
        Strategy::Optimized => permanent(field, &minor)?,
        Strategy::Naive if minor.len() <= 10 => permanent_naive(field, &minor)?,
        Strategy::Naive => permanent(field, &minor)?,
    };
    if field.is_zero(&per) {
        return Err(Error::violation(ViolationCode::PermanentZero, "the permanent of the columns in J vanishes"));
    }

    let n0 = system.a0.modulus();
    let denom = progression_denom(&system.tail, n0)?;
    let weights = Weights::new(&system.tail.moduli(), multipliers, Some(denom))?;
    let avoids = |pt: &[F::Elem]| {
        matrix.iter().zip(b).all(|(row, bi)| {
            let lhs = row.iter().zip(pt).fold(field.zero(), |acc, (a, xs)| field.add(&acc, &field.mul(a, xs)));
            lhs != *bi
        })
    };
    let table = tabulate(field, &weights, x, avoids, strategy)?;
    let progression = least_mask_progression(&table, &weights, n0, |tb, v| tb.least_mask(v).map(|mk| (mk, None)));
    Ok(Cor23Report { n0, permanent: field.elem_to_json(&per), progression })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor24Report {
    pub n0: u64,
    pub modulus: u64,
    /// Attainable values of `x_1 + ⋯ + x_k`.
    pub x_set: Vec<u64>,
    /// `{Σ_{s∈I} m_s/n_s}` over `|I| ∈ X`.
    pub s_set: Vec<Rational>,
    pub progression: Option<ProgressionWitness>,
    /// Present when `n_0 = N`: whether `S` is all of `{r/N}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full: Option<bool>,
    pub holds: bool,
}

/// Upper limit on `p^k` vectors enumerated for the set `X`.
pub const DIGIT_VECTOR_CAP: u64 = 1 << 24;

fn digit_space(p: u64, k: usize) -> Result<u64> {
    let total = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p)).filter(|&t| t <= DIGIT_VECTOR_CAP);
    total.ok_or(Error::Cap { what: "digit vectors p^k", cap: DIGIT_VECTOR_CAP, got: u64::MAX })
}

/// All `x ∈ [0, p−1]^k` with `Σ_j x_j a_ij ≠ b_i` for every row, visited in
/// odometer order with `x_1` varying fastest. `visit` returns `true` to stop.
fn for_each_admissible<F: Field>(
    field: &F,
    matrix: &[Vec<F::Elem>],
    b: &[F::Elem],
    k: usize,
    strategy: Strategy,
    mut visit: impl FnMut(&[u64]) -> bool,
) -> Result<()> {
    let p = field.characteristic();
    let count = digit_space(p, k)?;
    let mut digits = vec![0u64; k];
    match strategy {
        Strategy::Optimized => {
            let mut rows: Vec<F::Elem> = vec![field.zero(); matrix.len()];
            for step in 0..count {
                if step > 0 {
                    // increment the odometer, updating row sums per digit
                    for j in 0..k {
                        if digits[j] + 1 < p {
                            digits[j] += 1;
                            for (r, row) in rows.iter_mut().zip(matrix) {
                                *r = field.add(r, &row[j]);
                            }
                            break;
                        }
                        let back = field.from_int((p - 1) as i64);
                        for (r, row) in rows.iter_mut().zip(matrix) {
                            *r = field.sub(r, &field.mul(&back, &row[j]));
                        }
                        digits[j] = 0;
                    }
                }
                if rows.iter().zip(b).all(|(r, bi)| r != bi) && visit(&digits) {
                    return Ok(());
                }
            }
        }
        Strategy::Naive => {
            for mut code in 0..count {
                for d in digits.iter_mut() {
                    *d = code % p;
                    code /= p;
                }
                let ok = matrix.iter().zip(b).all(|(row, bi)| {
                    let lhs = row
                        .iter()
                        .zip(&digits)
                        .fold(field.zero(), |acc, (a, &d)| field.add(&acc, &field.mul(&field.from_int(d as i64), a)));
                    lhs != *bi
                });
                if ok && visit(&digits) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Set `X` of digit sums avoiding the constraints, and the fractional parts
/// of subsets whose size lies in `X`.
pub fn verify_cor24<F: Field + ElemCodec>(
    field: &F,
    system: &AugmentedSystem,
    multipliers: &[i64],
    matrix: &[Vec<F::Elem>],
    b: &[F::Elem],
    strategy: Strategy,
) -> Result<Cor24Report> {
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::violation(ViolationCode::NotPrime, "the field must have prime characteristic"));
    }
    let k = system.tail.len();
    same_len("multipliers", multipliers.len(), k)?;
    same_len("right-hand side b", b.len(), matrix.len())?;
    for row in matrix {
        same_len("matrix row", row.len(), k)?;
    }
    Weights::for_system(&system.tail, multipliers)?.require_coprime()?;
    let full = system.full()?;
    let total = positive_multiplicity(&full)?;
    a0_essential(system, total)?;
    if matrix.len() as u64 != total - 1 {
        return Err(Error::violation(
            ViolationCode::RowCount,
            format!("A_0 is a {total}-cover, so {} constraints are required, got {}", total - 1, matrix.len()),
        ));
    }
    characteristic_coprime(p, &system.tail.moduli())?;
    if rank(field, matrix.to_vec()) != matrix.len() {
        return Err(Error::violation(ViolationCode::RankDeficient, format!("the matrix has rank below {}", matrix.len())));
    }

    let mut in_x = vec![false; k * (p as usize - 1) + 1];
    for_each_admissible(field, matrix, b, k, strategy, |d| {
        in_x[d.iter().sum::<u64>() as usize] = true;
        false
    })?;
    let x_set: Vec<u64> = (0..in_x.len() as u64).filter(|&v| in_x[v as usize]).collect();

    let n0 = system.a0.modulus();
    let modulus = system.tail.period();
    let denom = progression_denom(&system.tail, n0)?;
    let weights = Weights::new(&system.tail.moduli(), multipliers, Some(denom))?;
    check_cap(k, max_k())?;
    let mut least: Vec<Option<u64>> = vec![None; denom as usize];
    let mut note = |v: u64, mask: u64| {
        let slot = &mut least[v as usize];
        *slot = Some(slot.map_or(mask, |m| m.min(mask)));
    };
    match strategy {
        Strategy::Optimized => weights.gray_walk(|mask, sum| {
            if in_x[mask.count_ones() as usize] {
                note(weights.frac_num(sum), mask);
            }
        })?,
        Strategy::Naive => {
            for mask in 0..1u64 << k {
                if in_x[mask.count_ones() as usize] {
                    note(weights.frac_num_naive(mask), mask);
                }
            }
        }
    }
    let s_set: Vec<Rational> =
        (0..denom).filter(|&v| least[v as usize].is_some()).map(|v| Rational::new(v, denom)).collect();
    let progression = least_progression_offset(n0, denom, |v| least[v as usize].is_some()).map(|t| ProgressionWitness {
        alpha: alpha_of(t, n0, denom),
        n0,
        witnesses: progression_numerators(t, n0, denom)
            .map(|v| weights.record(least[v as usize].expect("present")))
            .collect(),
    });
    let full_check = (n0 == modulus).then_some(s_set.len() as u64 == modulus);
    let holds = progression.is_some() && full_check.unwrap_or(true);
    Ok(Cor24Report { n0, modulus, x_set, s_set, progression, full: full_check, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NowhereZero {
    /// Digits `x_j ∈ [0, p−1]` with `Σ x_j ≤ k`.
    pub digits: Vec<u64>,
    pub x: Vec<serde_json::Value>,
    pub y: Vec<serde_json::Value>,
}

/// For a nonsingular `k×k` matrix over `GF(p^d)` and `c` outside the prime
/// subfield, finds `x_j = x_j·e + c` (never zero) with every `(Mx)_i ≠ 0`,
/// by way of the subset-size statement over `k + 1` copies of `0(1)`.
pub fn nowhere_zero_pair(field: &GaloisField, matrix: &[Vec<Vec<u64>>], c: &[u64], strategy: Strategy) -> Result<NowhereZero> {
    let k = matrix.len();
    for row in matrix {
        same_len("matrix row", row.len(), k)?;
    }
    let c = c.to_vec();
    if field.is_prime_subfield(&c) {
        return Err(Error::violation(ViolationCode::OutOfRange, "c lies in the prime subfield"));
    }
    if rank(field, matrix.to_vec()) != k {
        return Err(Error::violation(ViolationCode::RankDeficient, "the matrix is singular"));
    }
    let b: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| field.neg(&field.mul(&c, &field.sum(row.iter()))))
        .collect();
    let one = ResidueClass::new(0, 1)?;
    let system = AugmentedSystem::new(one, CoverSystem::new(vec![one; k])?);
    let rep = verify_cor24(field, &system, &vec![1; k], matrix, &b, strategy)?;
    if !rep.holds {
        return Err(Error::HypothesisFails("no admissible digit vector of size at most k".into()));
    }
    let mut found = None;
    for_each_admissible(field, matrix, &b, k, strategy, |d| {
        if d.iter().sum::<u64>() <= k as u64 {
            found = Some(d.to_vec());
            return true;
        }
        false
    })?;
    let digits = found.ok_or_else(|| Error::HypothesisFails("no admissible digit vector of size at most k".into()))?;
    let x: Vec<Vec<u64>> = digits.iter().map(|&d| field.add(&field.from_int(d as i64), &c)).collect();
    let y: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().zip(&x).fold(field.zero(), |acc, (a, xj)| field.add(&acc, &field.mul(a, xj))))
        .collect();
    if x.iter().chain(&y).any(|v| field.is_zero(v)) {
        return Err(Error::HypothesisFails("constructed pair has a zero entry".into()));
    }
    Ok(NowhereZero {
        digits,
        x: x.iter().map(|e| field.elem_to_json(e)).collect(),
        y: y.iter().map(|e| field.elem_to_json(e)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cor25Report {
    pub modulus: u64,
    /// `K`, 1-based.
    pub k_set: Vec<usize>,
    pub j: Vec<usize>,
    /// Least `I` for each `r/N_A`, `None` where no subset exists.
    pub found: Vec<Option<SubsetRecord>>,
    pub holds: bool,
}

/// `A` an `m`-cover whose last class is essential with modulus `N_A`; for a
/// `J ⊆ K` (0-based), every `r/N_A` is `{Σ_{s∈I} m_s/n_s}` for some
/// `I ⊆ [1, k−1]` with `I ∩ K = J`.
pub fn verify_cor25(system: &CoverSystem, multipliers: &[i64], j: &[usize], strategy: Strategy) -> Result<Cor25Report> {
    let k = system.len();
    if k == 0 {
        return Err(Error::invalid("the system is empty"));
    }
    same_len("multipliers", multipliers.len(), k - 1)?;
    let head = CoverSystem::new(system.classes()[..k - 1].to_vec())?;
    let modulus = system.period();
    let weights = Weights::new(&head.moduli(), multipliers, Some(modulus))?;
    weights.require_coprime()?;
    let m = positive_multiplicity(system)?;
    if !system.is_essential(k - 1, m)? {
        return Err(Error::violation(ViolationCode::NotEssential, "the last class is not essential"));
    }
    let last = system.classes()[k - 1];
    if last.modulus() != modulus {
        return Err(Error::violation(
            ViolationCode::ModulusNotLcm,
            format!("n_k = {} but N_A = {modulus}", last.modulus()),
        ));
    }
    let k_set: Vec<usize> = (0..k - 1).filter(|&s| system.classes()[s].contains(last.presented())).collect();
    for &s in j {
        if !k_set.contains(&s) {
            return Err(Error::violation(ViolationCode::JNotCovering, format!("index {} is not in K", s + 1)));
        }
    }
    let free: Vec<usize> = (0..k - 1).filter(|s| !k_set.contains(s)).collect();
    check_cap(free.len(), max_k())?;
    let fixed = mask_of(j);

    let mut least: Vec<Option<u64>> = vec![None; modulus as usize];
    match strategy {
        Strategy::Optimized => {
            let mut total = weights.scaled_sum(fixed);
            for step in GrayCode::new(free.len()) {
                if let Some((bit, on)) = step.flip {
                    let w = weights.scaled(free[bit]);
                    total += if on { w } else { -w };
                }
                let mask = fixed | lift_mask(step.mask, &free);
                let slot = &mut least[weights.frac_num(total) as usize];
                *slot = Some(slot.map_or(mask, |m| m.min(mask)));
            }
        }
        Strategy::Naive => {
            for sub in 0..1u64 << free.len() {
                let mask = fixed | lift_mask(sub, &free);
                let slot = &mut least[weights.frac_num_naive(mask) as usize];
                if slot.is_none() {
                    *slot = Some(mask);
                }
            }
        }
    }
    let found: Vec<Option<SubsetRecord>> = least.iter().map(|m| m.map(|mk| weights.record(mk))).collect();
    Ok(Cor25Report {
        modulus,
        k_set: k_set.iter().map(|s| s + 1).collect(),
        j: j.iter().map(|s| s + 1).collect(),
        holds: found.iter().all(Option::is_some),
        found,
    })
}

/// The trivial cover `{r(n)}_{r=0}^{n−1}` with `n−1(n)` distinguished:
/// subset sums of `m_1, …, m_{n−1}` meet every residue class mod `n`.
pub fn trivial_cover_residues(n: u64, multipliers: &[i64], strategy: Strategy) -> Result<Cor25Report> {
    let pairs: Vec<(i64, u64)> = (0..n as i64).map(|r| (r, n)).collect();
    verify_cor25(&CoverSystem::from_pairs(&pairs)?, multipliers, &[], strategy)
}
