//! Brute-force oracles shared by the integration tests. Everything here is
//! written from the definitions, using plain loops and `BigRational`, so it
//! shares no code paths with the library's enumerators.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use covsum::arith::{Field, Ring};
use covsum::poly::MultiPoly;
use covsum::residue::ResidueClass;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

pub fn bits(mask: u64, k: usize) -> impl Iterator<Item = usize> {
    (0..k).filter(move |s| mask >> s & 1 == 1)
}

pub fn lcm_all(ns: &[u64]) -> u64 {
    ns.iter().fold(1u64, |acc, &n| num_integer::lcm(acc, n))
}

pub fn mod_p(n: &BigInt, p: u64) -> u64 {
    let r = n % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.try_into().unwrap()
}

/// `C(n, r)` for integers `n ≥ 0`; zero when `r > n`.
pub fn choose(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(top, r)` for any integer `top`: falling factorial over `r!`.
pub fn choose_signed(top: i64, r: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r as i64 {
        num *= top - i;
        den *= i + 1;
    }
    num / den
}

/// `w_A(x)` counted directly.
pub fn coverage(classes: &[ResidueClass], x: i64) -> usize {
    classes.iter().filter(|c| (x - c.presented()).rem_euclid(c.modulus() as i64) == 0).count()
}

/// `m(A)`: minimum of `w_A` over one period.
pub fn multiplicity(classes: &[ResidueClass]) -> usize {
    let n = lcm_all(&classes.iter().map(|c| c.modulus()).collect::<Vec<_>>());
    (0..n as i64).map(|x| coverage(classes, x)).min().unwrap_or(0)
}

/// Terms of a random sparse polynomial in `k` variables of total degree at
/// most `deg`, duplicates merged.
pub fn random_terms<R: Ring, G: Rng>(
    ring: &R,
    rng: &mut G,
    k: usize,
    deg: usize,
    terms: usize,
    mut coeff: impl FnMut(&mut G) -> R::Elem,
) -> HashMap<Vec<u32>, R::Elem> {
    let mut out: HashMap<Vec<u32>, R::Elem> = HashMap::new();
    for _ in 0..terms {
        let mut e = vec![0u32; k];
        if k > 0 {
            for _ in 0..rng.gen_range(0..=deg) {
                e[rng.gen_range(0..k)] += 1;
            }
        }
        let c = coeff(rng);
        let slot = out.entry(e).or_insert_with(|| ring.zero());
        *slot = ring.add(slot, &c);
    }
    out
}

pub fn poly_of<R: Ring>(ring: &R, k: usize, terms: &HashMap<Vec<u32>, R::Elem>) -> MultiPoly<R> {
    MultiPoly::from_terms(ring.clone(), k, terms.iter().map(|(e, c)| (e.clone(), c.clone()))).unwrap()
}

/// Evaluates from the term list, without the library's evaluator.
pub fn eval_terms<R: Ring>(ring: &R, terms: &[(Vec<u32>, R::Elem)], x: &[R::Elem]) -> R::Elem {
    let mut acc = ring.zero();
    for (e, c) in terms {
        let mut t = c.clone();
        for (s, &k) in e.iter().enumerate() {
            for _ in 0..k {
                t = ring.mul(&t, &x[s]);
            }
        }
        acc = ring.add(&acc, &t);
    }
    acc
}

/// Sizes of the sets `S_r` for a given `α`: sums `Σ x_s` over assignments
/// with `P(x) ≠ 0` and `{Σ_{x_s ≠ b_s} m_s/n_s} = (α + r)/n_0`.
pub fn progression_set_sizes<F: Field>(
    field: &F,
    moduli: &[u64],
    multipliers: &[i64],
    poly: &MultiPoly<F>,
    x: &[(F::Elem, F::Elem)],
    alpha: &BigRational,
    n0: u64,
) -> Vec<usize> {
    let k = moduli.len();
    let terms: Vec<(Vec<u32>, F::Elem)> = poly.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let mut sets: Vec<HashSet<F::Elem>> = vec![HashSet::new(); n0 as usize];
    for mask in 0..1u64 << k {
        let point: Vec<F::Elem> =
            (0..k).map(|s| if mask >> s & 1 == 1 { x[s].1.clone() } else { x[s].0.clone() }).collect();
        if field.is_zero(&eval_terms(field, &terms, &point)) {
            continue;
        }
        let mut weight = BigRational::zero();
        for s in 0..k {
            if point[s] != x[s].0 {
                weight += q(multipliers[s], moduli[s] as i64);
            }
        }
        let shifted = frac(&weight) * BigRational::from_integer(BigInt::from(n0)) - alpha;
        if shifted.is_integer() && !shifted.is_negative() && shifted < BigRational::from_integer(BigInt::from(n0)) {
            let r: usize = shifted.to_integer().try_into().unwrap();
            let sum = point.iter().fold(field.zero(), |acc, v| field.add(&acc, v));
            sets[r].insert(sum);
        }
    }
    sets.iter().map(HashSet::len).collect()
}

/// All `{Σ_{s∈I} m_s/n_s}` over `I` passing `keep`.
pub fn fractions(moduli: &[u64], multipliers: &[i64], keep: impl Fn(u64) -> bool) -> BTreeSet<BigRational> {
    let k = moduli.len();
    (0..1u64 << k)
        .filter(|&m| keep(m))
        .map(|m| frac(&bits(m, k).map(|s| q(multipliers[s], moduli[s] as i64)).sum()))
        .collect()
}

/// Whether `keys` contains `{(α + r)/n_0 : r < n_0}` for some `α`.
pub fn has_progression(keys: &BTreeSet<BigRational>, n0: u64) -> bool {
    keys.iter().any(|v| (0..n0).all(|r| keys.contains(&frac(&(v + q(r as i64, n0 as i64))))))
}

/// Residues mod `p` reachable as subset sums of `c`.
pub fn subset_sums_mod(c: &[u64], p: u64) -> BTreeSet<u64> {
    let mut reach = BTreeSet::from([0u64]);
    for &x in c {
        let next: Vec<u64> = reach.iter().map(|r| (r + x) % p).collect();
        reach.extend(next);
    }
    reach
}

/// Signed count `Σ (−1)^{|I|}` over `I` with `q_t | Σ_{s∈I} c_{st} − c_t`.
pub fn zero_sum_lhs(c: &[Vec<i64>], targets: &[i64], moduli: &[i64], p: u64) -> u64 {
    let k = c.len();
    let mut total = 0i64;
    for mask in 0..1u64 << k {
        let ok = (0..moduli.len()).all(|t| {
            let s: i64 = bits(mask, k).map(|s| c[s][t]).sum();
            (s - targets[t]) % moduli[t] == 0
        });
        if ok {
            total += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        }
    }
    total.rem_euclid(p as i64) as u64
}

/// `Σ ∏_t ∏_{s∈I_t} c_{st}` over ordered partitions of the rows with part
/// `t` of size `q_t − 1`, by recursion on the rows.
pub fn zero_sum_rhs(c: &[Vec<i64>], moduli: &[i64], p: u64) -> u64 {
    fn go(c: &[Vec<i64>], row: usize, room: &mut [i64], p: i64) -> i64 {
        if row == c.len() {
            return i64::from(room.iter().all(|&r| r == 0));
        }
        let mut acc = 0;
        for t in 0..room.len() {
            if room[t] > 0 {
                room[t] -= 1;
                acc = (acc + c[row][t].rem_euclid(p) * go(c, row + 1, room, p)) % p;
                room[t] += 1;
            }
        }
        acc
    }
    let mut room: Vec<i64> = moduli.iter().map(|m| m - 1).collect();
    go(c, 0, &mut room, p as i64) as u64
}

/// Coefficients of `∏ (x − c_s)`, lowest degree first.
pub fn expand_roots(c: &[i64]) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for &root in c {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * root;
        }
        poly = next;
    }
    poly
}

/// Number of `r`-subsets of `c` whose sum is `target` mod `q`.
pub fn count_sized(c: &[i64], r: u32, target: i64, q: i64) -> u64 {
    let k = c.len();
    (0..1u64 << k)
        .filter(|m| m.count_ones() == r)
        .filter(|&m| (bits(m, k).map(|s| c[s]).sum::<i64>() - target).rem_euclid(q) == 0)
        .count() as u64
}

/// Number of `r`-subsets of points in `ℤ_q²` summing to zero.
pub fn count_zero_sum_pairs(c: &[(i64, i64)], r: u32, q: i64) -> u64 {
    let k = c.len();
    (0..1u64 << k)
        .filter(|m| m.count_ones() == r)
        .filter(|&m| {
            let (a, b) = bits(m, k).fold((0, 0), |(a, b), s| (a + c[s].0, b + c[s].1));
            a.rem_euclid(q) == 0 && b.rem_euclid(q) == 0
        })
        .count() as u64
}

/// Both sides of the character-sum identity at every `z ∈ [0, N_A)`:
/// `Σ_θ ζ^{−z N_A θ} ψ(θ)` and `(−1)^k c(I_z) ∏_{s∉I_z} (ζ^{N_A(a_s−z)m_s/n_s} − 1)`.
/// Also returns the table of `ψ`.
#[allow(clippy::type_complexity)]
pub fn identity_sides<F: Field>(
    field: &F,
    classes: &[ResidueClass],
    multipliers: &[i64],
    poly: &MultiPoly<F>,
    zeta: &F::Elem,
) -> (Vec<(F::Elem, F::Elem)>, HashMap<BigRational, F::Elem>, Vec<F::Elem>) {
    let k = classes.len();
    let moduli: Vec<u64> = classes.iter().map(|c| c.modulus()).collect();
    let n = lcm_all(&moduli) as i128;
    let terms: Vec<(Vec<u32>, F::Elem)> = poly.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    let zeta_pow = |e: i128| field.pow(zeta, e.rem_euclid(n) as u64);

    let mut psi: HashMap<BigRational, F::Elem> = HashMap::new();
    for mask in 0..1u64 << k {
        let point: Vec<F::Elem> = (0..k).map(|s| if mask >> s & 1 == 1 { field.one() } else { field.zero() }).collect();
        let value = eval_terms(field, &terms, &point);
        let theta = frac(&bits(mask, k).map(|s| q(multipliers[s], moduli[s] as i64)).sum());
        let e: i128 = bits(mask, k)
            .map(|s| classes[s].presented() as i128 * multipliers[s] as i128 * (n / moduli[s] as i128))
            .sum();
        let mut term = field.mul(&value, &zeta_pow(e));
        if mask.count_ones() % 2 == 1 {
            term = field.neg(&term);
        }
        let slot = psi.entry(theta).or_insert_with(|| field.zero());
        *slot = field.add(slot, &term);
    }

    let mut sides = Vec::new();
    let mut coeffs = Vec::new();
    for z in 0..n as i64 {
        let mut lhs = field.zero();
        for (theta, value) in &psi {
            let scaled = theta * BigRational::from_integer(BigInt::from(n));
            let t: i128 = scaled.to_integer().try_into().unwrap();
            lhs = field.add(&lhs, &field.mul(&zeta_pow(-(z as i128) * t), value));
        }
        let inside: Vec<bool> = classes.iter().map(|c| (z - c.presented()).rem_euclid(c.modulus() as i64) == 0).collect();
        let e: Vec<u32> = inside.iter().map(|&b| u32::from(b)).collect();
        let c_z = terms.iter().filter(|(t, _)| *t == e).fold(field.zero(), |acc, (_, c)| field.add(&acc, c));
        let mut rhs = if k.is_multiple_of(2) { c_z.clone() } else { field.neg(&c_z) };
        for s in 0..k {
            if !inside[s] {
                let ex = (classes[s].presented() as i128 - z as i128) * multipliers[s] as i128 * (n / moduli[s] as i128);
                rhs = field.mul(&rhs, &field.sub(&zeta_pow(ex), &field.one()));
            }
        }
        sides.push((lhs, rhs));
        coeffs.push(c_z);
    }
    (sides, psi, coeffs)
}
