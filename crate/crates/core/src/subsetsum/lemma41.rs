use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::arith::roots::has_exact_order;
use crate::arith::{Field, Rational};
use crate::error::{Error, Result, ViolationCode};
use crate::poly::{coeff_by_subsets, mobius_transform, PolyOracle};
use crate::residue::CoverSystem;
use crate::subsets::{check_cap, indices_of, mask_of, max_k, GrayCode};

use super::checks::{characteristic_coprime, same_len};
use super::kernel::{Strategy, Weights};

fn check_inputs<F: Field, P: PolyOracle<F>>(
    system: &CoverSystem,
    multipliers: &[i64],
    f: &P,
    zeta: &F::Elem,
) -> Result<Weights> {
    let field = f.ring();
    let k = system.len();
    same_len("multipliers", multipliers.len(), k)?;
    same_len("variables of f", f.nvars(), k)?;
    check_cap(k, max_k())?;
    let n = system.period();
    characteristic_coprime(field.characteristic(), &[n])?;
    if !has_exact_order(field, zeta, n) {
        return Err(Error::invalid(format!("ζ does not have multiplicative order {n}")));
    }
    let m = system.covering_multiplicity() as usize;
    if let Some(d) = f.degree_bound() {
        if d > m {
            return Err(Error::violation(ViolationCode::DegreeBound, format!("deg f = {d} exceeds m(A) = {m}")));
        }
    }
    Weights::for_system(system, multipliers)
}

/// Per class, `a_s m_s N_A/n_s mod N_A`.
fn exponent_weights(system: &CoverSystem, multipliers: &[i64]) -> Vec<i128> {
    let n = system.period() as i128;
    system
        .classes()
        .iter()
        .zip(multipliers)
        .map(|(c, &m)| (c.residue() as i128 * m as i128 * (n / c.modulus() as i128)).rem_euclid(n))
        .collect()
}

/// `ψ(θ)` for every θ, keyed by the numerator `N_A·θ`; zero values dropped.
fn psi_table<F: Field, P: PolyOracle<F>>(
    system: &CoverSystem,
    weights: &Weights,
    f: &P,
    zeta: &F::Elem,
    values: Option<&[F::Elem]>,
    strategy: Strategy,
) -> BTreeMap<u64, F::Elem> {
    let field = f.ring();
    let k = system.len();
    let n = system.period();
    let mut psi: BTreeMap<u64, F::Elem> = BTreeMap::new();
    match strategy {
        Strategy::Optimized => {
            let values = values.expect("indicator values supplied");
            let ew = exponent_weights(system, weights.multipliers());
            // Bucket (−1)^{|I|} f(𝟙_I) by (θ, exponent) before touching ζ.
            let mut buckets: HashMap<(u64, u64), F::Elem> = HashMap::new();
            let (mut theta, mut expo) = (0i128, 0i128);
            for step in GrayCode::new(k) {
                if let Some((bit, on)) = step.flip {
                    let sign = if on { 1 } else { -1 };
                    theta += sign * weights.scaled(bit);
                    expo += sign * ew[bit];
                }
                let v = &values[step.mask as usize];
                if field.is_zero(v) {
                    continue;
                }
                let key = (weights.frac_num(theta), expo.rem_euclid(n as i128) as u64);
                let slot = buckets.entry(key).or_insert_with(|| field.zero());
                *slot = if step.mask.count_ones() % 2 == 0 { field.add(slot, v) } else { field.sub(slot, v) };
            }
            let powers: Vec<F::Elem> = (0..n).map(|e| field.pow(zeta, e)).collect();
            for ((v, e), acc) in buckets {
                let slot = psi.entry(v).or_insert_with(|| field.zero());
                *slot = field.add(slot, &field.mul(&acc, &powers[e as usize]));
            }
        }
        Strategy::Naive => {
            let big_n = Rational::from(n as i64);
            for mask in 0..1u64 << k {
                let point: Vec<F::Elem> =
                    (0..k).map(|s| if mask >> s & 1 == 1 { field.one() } else { field.zero() }).collect();
                let value = f.evaluate(&point);
                let exponent = indices_of(mask).into_iter().fold(Rational::zero(), |acc, s| {
                    let c = &system.classes()[s];
                    acc + Rational::new(c.residue() as i128 * weights.multipliers()[s] as i128, c.modulus())
                }) * big_n.clone();
                assert!(exponent.is_integer(), "n_s divides N_A");
                let e: i128 = exponent.floor().try_into().expect("small exponent");
                let term = field.mul(&value, &field.pow(zeta, e.rem_euclid(n as i128) as u64));
                let slot = psi.entry(weights.frac_num_naive(mask)).or_insert_with(|| field.zero());
                *slot = if mask.count_ones() % 2 == 0 { field.add(slot, &term) } else { field.sub(slot, &term) };
            }
        }
    }
    psi.retain(|_, x| !field.is_zero(x));
    psi
}

/// `ψ(θ) = Σ_{{Σ_{s∈I} m_s/n_s} = θ} (−1)^{|I|} f(𝟙_I) ζ^{N_A Σ_{s∈I} a_s m_s/n_s}`.
pub fn psi<F: Field, P: PolyOracle<F>>(
    system: &CoverSystem,
    multipliers: &[i64],
    f: &P,
    zeta: &F::Elem,
    theta: &Rational,
) -> Result<F::Elem> {
    let weights = check_inputs(system, multipliers, f, zeta)?;
    if theta.is_negative() || *theta >= Rational::one() {
        return Err(Error::invalid(format!("θ = {theta} is outside [0, 1)")));
    }
    let scaled = theta.clone() * Rational::from(system.period() as i64);
    if !scaled.is_integer() {
        return Ok(f.ring().zero());
    }
    let v: u64 = scaled.floor().try_into().expect("below N_A");
    let values = f.indicator_values()?;
    let table = psi_table(system, &weights, f, zeta, Some(&values), Strategy::Optimized);
    Ok(table.get(&v).cloned().unwrap_or_else(|| f.ring().zero()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma41Report {
    pub modulus: u64,
    pub multiplicity: u64,
    /// θ with `ψ(θ) ≠ 0`.
    pub nonzero_psi: Vec<Rational>,
    /// `z ∈ [0, N_A)` where the two sides of the identity differ.
    pub identity_failures: Vec<u64>,
    pub identity_holds: bool,
    /// Whether `c(I_z) = 0` for every `z`.
    pub coefficients_vanish: bool,
    pub psi_vanishes: bool,
    /// Whether the converse direction applies (all `gcd(m_s, n_s) = 1`).
    pub coprime: bool,
    pub equivalence_holds: bool,
}

/// Checks, for every `z ∈ [0, N_A)`,
/// `Σ_θ ζ^{−z N_A θ} ψ(θ) = (−1)^k c(I_z) ∏_{s∉I_z} (ζ^{N_A(a_s−z)m_s/n_s} − 1)`
/// with `c(I_z) = [∏_{s∈I_z} x_s] f`, and the vanishing equivalence between
/// the `c(I_z)` and the `ψ(θ)`.
pub fn verify_lemma41<F: Field, P: PolyOracle<F>>(
    system: &CoverSystem,
    multipliers: &[i64],
    f: &P,
    zeta: &F::Elem,
    strategy: Strategy,
) -> Result<Lemma41Report> {
    let weights = check_inputs(system, multipliers, f, zeta)?;
    let field = f.ring();
    let k = system.len();
    let n = system.period();

    let needed: BTreeSet<u64> = (0..n as i64).map(|z| mask_of(&system.covering_indices(z))).collect();
    let (psi, coeffs): (BTreeMap<u64, F::Elem>, HashMap<u64, F::Elem>) = match strategy {
        Strategy::Optimized => {
            let values = f.indicator_values()?;
            let psi = psi_table(system, &weights, f, zeta, Some(&values), strategy);
            let mut c = values;
            mobius_transform(field, &mut c);
            (psi, needed.iter().map(|&t| (t, c[t as usize].clone())).collect())
        }
        Strategy::Naive => {
            let psi = psi_table(system, &weights, f, zeta, None, strategy);
            let coeffs = needed
                .iter()
                .map(|&t| Ok((t, coeff_by_subsets(f, &indices_of(t))?)))
                .collect::<Result<_>>()?;
            (psi, coeffs)
        }
    };

    let ew = exponent_weights(system, multipliers);
    let zeta_pow = |e: i128| field.pow(zeta, e.rem_euclid(n as i128) as u64);
    let mut failures = Vec::new();
    for z in 0..n as i64 {
        let lhs = psi
            .iter()
            .fold(field.zero(), |acc, (&v, x)| field.add(&acc, &field.mul(&zeta_pow(-(z as i128) * v as i128), x)));
        let covering = mask_of(&system.covering_indices(z));
        let mut rhs = coeffs[&covering].clone();
        if k % 2 == 1 {
            rhs = field.neg(&rhs);
        }
        for s in (0..k).filter(|s| covering >> s & 1 == 0) {
            // N_A (a_s − z) m_s / n_s = ew_s − z m_s N_A/n_s
            let e = ew[s] - z as i128 * weights.scaled(s);
            rhs = field.mul(&rhs, &field.sub(&zeta_pow(e), &field.one()));
        }
        if lhs != rhs {
            failures.push(z as u64);
        }
    }

    let coefficients_vanish = coeffs.values().all(|c| field.is_zero(c));
    let psi_vanishes = psi.is_empty();
    let coprime = weights.all_coprime();
    let forward = !coefficients_vanish || psi_vanishes;
    let converse = !coprime || !psi_vanishes || coefficients_vanish;
    Ok(Lemma41Report {
        modulus: n,
        multiplicity: system.covering_multiplicity(),
        nonzero_psi: psi.keys().map(|&v| Rational::new(v, n)).collect(),
        identity_holds: failures.is_empty(),
        identity_failures: failures,
        coefficients_vanish,
        psi_vanishes,
        coprime,
        equivalence_holds: forward && converse,
    })
}
