//! The release criteria, one PASS/FAIL line each. Every criterion recomputes
//! its claim with the brute-force oracles in `common` and must finish inside
//! its time budget.

mod common;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;

use covsum::arith::{
    binom_criterion, root_of_unity, ElemCodec, Field, FieldSpec, Integers, PrimeField, Rational, Rationals, Ring, RootOfUnity,
};
use covsum::cli::generate::t21_instance;
use covsum::cli::instances::{C22File, C25File, L41File, S10File, T21File};
use covsum::cli::suite::run_suite;
use covsum::cli::Status;
use covsum::poly::{coeff_by_subsets, escott_sum, parse_poly, MultiPoly};
use covsum::residue::{AugmentedSystem, CoverSystem};
use covsum::subsetsum::{
    count_unit_fraction_subsets, trivial_cover_residues, verify_cor22, verify_cor25, verify_lemma41, verify_theorem21,
    Strategy, Theorem21Instance,
};
use covsum::zerosum::{cor33_ii_check, kemnitz_congruence, verify_thm32, ZeroSumInstance};

use common::*;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn corpus<T: DeserializeOwned>(name: &str) -> Vec<(String, T)> {
    let dir = corpus_dir().join(name);
    let mut paths: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).unwrap();
            (p.file_name().unwrap().to_string_lossy().into_owned(), serde_json::from_str(&text).unwrap())
        })
        .collect()
}

fn big(r: &Rational) -> BigRational {
    r.to_string().parse().unwrap()
}

fn rat_coeff<G: Rng>(rng: &mut G) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

// 1. Coefficient of ∏_{j∈J} x_j from the values on {0,1}^k.

fn subset_formula_field<F: Field, G: Rng>(f: &F, rng: &mut G, coeff: impl Fn(&F, &mut G) -> F::Elem) -> Result<(), String> {
    for _ in 0..200 {
        let k = rng.gen_range(1..=8);
        let j: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.6)).collect();
        let terms = rng.gen_range(1..=8);
        let list = random_terms(f, rng, k, j.len(), terms, |r| coeff(f, r));
        let poly = poly_of(f, k, &list);
        let target: Vec<u32> = (0..k).map(|s| u32::from(j.contains(&s))).collect();
        let expected = list.get(&target).cloned().unwrap_or_else(|| f.zero());
        let got = coeff_by_subsets(&poly, &j).map_err(|e| e.to_string())?;
        ensure!(got == expected, "J = {j:?}, f = {poly:?}: formula {got:?}, coefficient {expected:?}");
    }
    Ok(())
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    subset_formula_field(&Rationals, &mut rng, |_, r| rat_coeff(r))?;
    for p in [2, 3, 5, 7] {
        subset_formula_field(&PrimeField::new(p).unwrap(), &mut rng, |f, r| f.from_int(r.gen_range(-20..=20)))?;
    }
    Ok("1000 polynomials over Q, Z2, Z3, Z5, Z7".into())
}

// 2. Alternating power sums.

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut sums = 0;
    for k in 1..=10usize {
        for _ in 0..10 {
            let c: Vec<BigInt> = (0..k).map(|_| BigInt::from(rng.gen_range(-1000..=1000))).collect();
            for n in 0..=k as u32 {
                let mut oracle = BigInt::zero();
                for mask in 0..1u64 << k {
                    let s: BigInt = bits(mask, k).map(|i| c[i].clone()).sum();
                    let term = num_traits::pow(s, n as usize);
                    if mask.count_ones() % 2 == 0 {
                        oracle += term;
                    } else {
                        oracle -= term;
                    }
                }
                let got = escott_sum(&Integers, &c, n).map_err(|e| e.to_string())?;
                ensure!(got == oracle, "c = {c:?}, n = {n}: library {got}, direct {oracle}");
                if (n as usize) < k {
                    ensure!(got.is_zero(), "c = {c:?}, n = {n}: sum {got} is not zero");
                } else {
                    // At n = k only the product term survives: (−1)^k k! ∏ c_s.
                    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
                    let prod: BigInt = c.iter().product();
                    let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    ensure!(got == sign * fact * prod, "c = {c:?}: top sum {got}");
                }
                sums += 1;
            }
        }
    }
    Ok(format!("{sums} sums"))
}

// 3. C(a − 1, p^h − 1) mod p against [p^h | a].

fn criterion_3() -> Check {
    let mut values = 0;
    for p in [2u64, 3, 5, 7] {
        for h in 1..=3u32 {
            let q = p.pow(h);
            for a in -200i64..=200 {
                let iverson = u64::from(a % q as i64 == 0);
                let binomial = mod_p(&choose_signed(a - 1, q - 1), p);
                let got = binom_criterion(a, p, h).map_err(|e| e.to_string())?;
                ensure!(got == iverson && binomial == iverson, "a = {a}, p^h = {p}^{h}: got {got}, binomial {binomial}");
                values += 1;
            }
        }
    }
    Ok(format!("{values} values"))
}

// 4. Progressions of nonvanishing assignments.

fn t21_case<F: Field + ElemCodec>(f: &F, file: &T21File) -> Result<(), String> {
    let k = file.classes.len();
    let moduli: Vec<u64> = file.classes.iter().map(|c| c.modulus()).collect();
    let n_a = lcm_all(&moduli);
    ensure!(k <= 12 && n_a <= 24, "instance too large: k = {k}, N_A = {n_a}");
    let p = f.characteristic();
    ensure!(p == 0 || !n_a.is_multiple_of(p), "characteristic {p} divides N_A = {n_a}");

    let multipliers = file.multipliers.clone().unwrap_or_else(|| vec![1; k]);
    let poly = parse_poly(f, k, &file.p).map_err(|e| e.to_string())?;
    let x: Vec<(F::Elem, F::Elem)> =
        file.x.iter().map(|[b, c]| (f.elem_from_json(b).unwrap(), f.elem_from_json(c).unwrap())).collect();
    let inst = Theorem21Instance {
        system: AugmentedSystem::new(file.a0, CoverSystem::new(file.classes.clone()).unwrap()),
        multipliers: multipliers.clone(),
        j: file.j.iter().map(|s| s - 1).collect(),
        p: poly.clone(),
        x: x.clone(),
    };
    let rep = verify_theorem21(&inst, Strategy::Optimized).map_err(|e| e.to_string())?;
    let deg = poly.degree().unwrap_or(0);
    let bound = file.j.len() - deg + 1;
    ensure!(rep.theorem_holds, "reported failure: {rep:?}");
    ensure!(rep.bound == bound, "bound {} instead of {bound}", rep.bound);

    let sizes = progression_set_sizes(f, &moduli, &multipliers, &poly, &x, &big(&rep.alpha), file.a0.modulus());
    ensure!(sizes == rep.sizes, "sizes {:?} but the oracle finds {sizes:?}", rep.sizes);
    ensure!(sizes.iter().all(|&s| s >= bound), "|S_r| = {sizes:?} below {bound}");
    Ok(())
}

fn criterion_4() -> Check {
    let fields = [FieldSpec::Rational, FieldSpec::Prime { p: 5 }, FieldSpec::Prime { p: 7 }, FieldSpec::Prime { p: 11 }];
    let mut checked = 0;
    for i in 0..120u64 {
        let file = t21_instance(5000 + i, fields[i as usize % 4]).map_err(|e| e.to_string())?;
        match file.field {
            FieldSpec::Rational => t21_case(&Rationals, &file),
            FieldSpec::Prime { p } => t21_case(&PrimeField::new(p).unwrap(), &file),
            other => Err(format!("unexpected field {other:?}")),
        }
        .map_err(|e| format!("seed {}: {e}", 5000 + i))?;
        checked += 1;
    }
    for (name, file) in corpus::<T21File>("t21") {
        match file.field {
            FieldSpec::Rational => t21_case(&Rationals, &file),
            FieldSpec::Prime { p } => t21_case(&PrimeField::new(p).unwrap(), &file),
            other => Err(format!("unexpected field {other:?}")),
        }
        .map_err(|e| format!("t21/{name}: {e}"))?;
        checked += 1;
    }
    Ok(format!("{checked} instances"))
}

// 5. Prescribed subset sums mod p.

fn wu_case(p: u64, c: &[u64]) -> Result<(), String> {
    let system = AugmentedSystem::new(
        covsum::residue::ResidueClass::new(0, 1).unwrap(),
        CoverSystem::from_pairs(&vec![(0, 1); c.len()]).unwrap(),
    );
    let reach = subset_sums_mod(c, p);
    ensure!(reach.len() == p as usize, "c = {c:?} mod {p}: only {reach:?} reachable");
    for target in 0..p {
        let rep = verify_cor22(&system, &vec![1; c.len()], p, c, target, Strategy::Optimized).map_err(|e| e.to_string())?;
        let w = rep.progression.ok_or_else(|| format!("c = {c:?}, target {target}: no subset found"))?;
        let sum: u64 = bits(w.witnesses[0].mask, c.len()).map(|s| c[s]).sum();
        ensure!(sum % p == target, "c = {c:?}: witness sums to {sum}, not {target}");
    }
    Ok(())
}

fn criterion_5() -> Check {
    let mut tuples = 0;
    for p in [2u64, 3, 5] {
        let len = p as u32 - 1;
        for code in 0..(p - 1).pow(len) {
            let c: Vec<u64> = (0..len).map(|i| code / (p - 1).pow(i) % (p - 1) + 1).collect();
            wu_case(p, &c)?;
            tuples += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    for _ in 0..1000 {
        let c: Vec<u64> = (0..6).map(|_| rng.gen_range(1..7)).collect();
        wu_case(7, &c)?;
        tuples += 1;
    }

    let mut covers = 0;
    for (name, file) in corpus::<C22File>("c22") {
        let k = file.classes.len();
        let moduli: Vec<u64> = file.classes.iter().map(|c| c.modulus()).collect();
        let multipliers = file.multipliers.clone().unwrap_or_else(|| vec![1; k]);
        let mut all = file.classes.clone();
        all.insert(0, file.a0);
        ensure!(multiplicity(&all) >= file.p as usize, "c22/{name}: not a {}-cover", file.p);
        let keys = fractions(&moduli, &multipliers, |m| {
            bits(m, k).map(|s| file.c_coeffs[s]).sum::<u64>() % file.p == file.c % file.p
        });
        let n0 = file.a0.modulus();
        ensure!(has_progression(&keys, n0), "c22/{name}: no progression of length {n0} in {keys:?}");
        let system = AugmentedSystem::new(file.a0, CoverSystem::new(file.classes.clone()).unwrap());
        let rep = verify_cor22(&system, &multipliers, file.p, &file.c_coeffs, file.c, Strategy::Optimized)
            .map_err(|e| format!("c22/{name}: {e}"))?;
        let w = rep.progression.ok_or_else(|| format!("c22/{name}: library found no progression"))?;
        for (r, rec) in w.witnesses.iter().enumerate() {
            let expected = frac(&((big(&w.alpha) + BigRational::from_integer(r.into())) / BigRational::from_integer(n0.into())));
            let value = frac(&bits(rec.mask, k).map(|s| q(multipliers[s], moduli[s] as i64)).sum());
            ensure!(value == expected, "c22/{name}: witness {r} has fraction {value}, expected {expected}");
            ensure!(keys.contains(&value), "c22/{name}: witness {r} misses the target sum");
        }
        covers += 1;
    }
    Ok(format!("{tuples} tuples, {covers} corpus covers"))
}

// 6. All residues from subset sums.

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut runs = 0;
    for n in 2..=8u64 {
        for _ in 0..30 {
            let m: Vec<i64> = (1..n)
                .map(|_| loop {
                    let x = rng.gen_range(-40..=40i64);
                    if num_integer::gcd(x, n as i64) == 1 {
                        break x;
                    }
                })
                .collect();
            let residues: BTreeSet<i64> = (0..1u64 << m.len())
                .map(|mask| bits(mask, m.len()).map(|s| m[s]).sum::<i64>().rem_euclid(n as i64))
                .collect();
            ensure!(residues.len() == n as usize, "n = {n}, m = {m:?}: residues {residues:?}");
            let rep = trivial_cover_residues(n, &m, Strategy::Optimized).map_err(|e| e.to_string())?;
            ensure!(rep.holds, "n = {n}, m = {m:?}: library reports a gap");
            runs += 1;
        }
    }

    let mut covers = 0;
    for (name, file) in corpus::<C25File>("c25") {
        let k = file.classes.len();
        let moduli: Vec<u64> = file.classes.iter().map(|c| c.modulus()).collect();
        let n_a = lcm_all(&moduli);
        ensure!(moduli[k - 1] == n_a, "c25/{name}: last modulus is not N_A");
        let m = multiplicity(&file.classes);
        ensure!(multiplicity(&file.classes[..k - 1]) < m, "c25/{name}: last class is not essential");
        let keys = fractions(&moduli[..k - 1], &vec![1; k - 1], |_| true);
        let all: BTreeSet<BigRational> = (0..n_a as i64).map(|r| q(r, n_a as i64)).collect();
        ensure!(keys == all, "c25/{name}: reciprocal sums give {} of {n_a} residues", keys.len());
        let system = CoverSystem::new(file.classes.clone()).unwrap();
        let rep = verify_cor25(&system, &vec![1; k - 1], &[], Strategy::Optimized).map_err(|e| e.to_string())?;
        ensure!(rep.holds, "c25/{name}: library reports a gap");
        covers += 1;
    }
    Ok(format!("{runs} trivial covers, {covers} corpus covers"))
}

// 7. Character-sum identity in Q(ζ_N).

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let (mut polys, mut vanishing) = (0, 0);
    for (name, file) in corpus::<L41File>("l41") {
        let k = file.classes.len();
        let system = CoverSystem::new(file.classes.clone()).unwrap();
        let n = system.period();
        ensure!(n <= 12, "l41/{name}: N_A = {n}");
        let multipliers = file.multipliers.clone().unwrap_or_else(|| vec![1; k]);
        let coprime = multipliers.iter().zip(&file.classes).all(|(&m, c)| num_integer::gcd(m, c.modulus() as i64) == 1);
        let m = multiplicity(&file.classes);
        let RootOfUnity::Cyclotomic { field, zeta } = root_of_unity(FieldSpec::Rational, n).unwrap() else {
            return Err("no cyclotomic root".into());
        };
        let covered: Vec<Vec<u32>> = (0..n as i64)
            .map(|z| file.classes.iter().map(|c| u32::from(c.contains(z))).collect())
            .collect();
        for trial in 0..50 {
            let terms = rng.gen_range(1..=5);
            let mut list = random_terms(&field, &mut rng, k, m, terms, |r| {
                field.from_rational(&rat_coeff(r)).unwrap()
            });
            // Half the trials strip every c(I_z) so the forward direction is exercised.
            if trial % 2 == 1 {
                list.retain(|e, _| !covered.contains(e));
            }
            let poly: MultiPoly<_> = poly_of(&field, k, &list);
            let (sides, psi, coeffs) = identity_sides(&field, &file.classes, &multipliers, &poly, &zeta);
            for (z, (lhs, rhs)) in sides.iter().enumerate() {
                ensure!(lhs == rhs, "l41/{name}, z = {z}: sides differ for {poly:?}");
            }
            let c_zero = coeffs.iter().all(|c| field.is_zero(c));
            let psi_zero = psi.values().all(|v| field.is_zero(v));
            if c_zero {
                ensure!(psi_zero, "l41/{name}: all c(I_z) vanish but ψ does not");
                vanishing += 1;
            }
            if coprime && psi_zero {
                ensure!(c_zero, "l41/{name}: ψ vanishes but some c(I_z) does not");
            }
            let rep = verify_lemma41(&system, &multipliers, &poly, &zeta, Strategy::Optimized).map_err(|e| e.to_string())?;
            ensure!(rep.identity_holds && rep.equivalence_holds, "l41/{name}: library report {rep:?}");
            ensure!(rep.coefficients_vanish == c_zero && rep.psi_vanishes == psi_zero, "l41/{name}: vanishing flags differ");
            polys += 1;
        }
    }
    Ok(format!("{polys} polynomials, {vanishing} with all c(I_z) = 0"))
}

// 8. Zero-sum congruence.

fn random_zero_sum<G: Rng>(rng: &mut G, above: bool) -> ZeroSumInstance {
    loop {
        let p = [2u64, 3][rng.gen_range(0..2)];
        let l = rng.gen_range(1..=2);
        let h: Vec<u32> = (0..l).map(|_| rng.gen_range(1..=2)).collect();
        let threshold: usize = h.iter().map(|&h| p.pow(h) as usize - 1).sum();
        if threshold + usize::from(above) > 12 {
            continue;
        }
        let k = if above { rng.gen_range(threshold + 1..=12) } else { threshold };
        let bound = 2 * p.pow(*h.iter().max().unwrap()) as i64;
        return ZeroSumInstance {
            p,
            h,
            c: (0..k).map(|_| (0..l).map(|_| rng.gen_range(-bound..bound)).collect()).collect(),
            targets: (0..l).map(|_| rng.gen_range(-bound..bound)).collect(),
        };
    }
}

fn zero_sum_case(inst: &ZeroSumInstance) -> Result<(u64, u64), String> {
    let moduli: Vec<i64> = inst.h.iter().map(|&h| inst.p.pow(h) as i64).collect();
    let lhs = zero_sum_lhs(&inst.c, &inst.targets, &moduli, inst.p);
    let rhs = zero_sum_rhs(&inst.c, &moduli, inst.p);
    let rep = verify_thm32(inst, Strategy::Optimized).map_err(|e| e.to_string())?;
    ensure!(rep.lhs == lhs && rep.rhs == rhs, "{inst:?}: library ({}, {}), oracle ({lhs}, {rhs})", rep.lhs, rep.rhs);
    ensure!(rep.holds == (lhs == rhs), "{inst:?}: holds flag disagrees");
    Ok((lhs, rhs))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for _ in 0..1000 {
        let inst = random_zero_sum(&mut rng, false);
        let (lhs, rhs) = zero_sum_case(&inst)?;
        ensure!(lhs == rhs, "{inst:?}: {lhs} ≢ {rhs}");
    }
    for _ in 0..200 {
        let inst = random_zero_sum(&mut rng, true);
        let (lhs, rhs) = zero_sum_case(&inst)?;
        ensure!(lhs == 0 && rhs == 0, "{inst:?}: signed count {lhs} above the threshold");
    }
    Ok("1000 instances at the threshold, 200 above".into())
}

// 9. Fixed-size zero-sum counts.

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for (p, h) in [(2u64, 1u32), (3, 1), (2, 2)] {
        let q = p.pow(h) as i64;
        for _ in 0..200 {
            let c: Vec<i64> = (0..2 * q - 2).map(|_| rng.gen_range(-30..=30)).collect();
            let target = rng.gen_range(-30..=30);
            let count = count_sized(&c, q as u32 - 1, target, q);
            let coefficient = expand_roots(&c)[q as usize - 1].clone();
            ensure!(count % p == mod_p(&coefficient, p), "p^h = {q}, c = {c:?}, target {target}: {count} vs {coefficient}");
            let rep = cor33_ii_check(p, h, &c, target, Strategy::Optimized).map_err(|e| e.to_string())?;
            ensure!(rep.count == count && rep.coefficient == coefficient && rep.holds, "c = {c:?}: library {rep:?}");
        }
    }
    for q in [2i64, 3, 4] {
        let p = if q == 4 { 2 } else { q as u64 };
        for _ in 0..200 {
            let c: Vec<(i64, i64)> = (0..4 * q - 2).map(|_| (rng.gen_range(0..q), rng.gen_range(0..q))).collect();
            let n_q = count_zero_sum_pairs(&c, q as u32, q);
            let n_3q = count_zero_sum_pairs(&c, 3 * q as u32, q);
            ensure!(n_q % p == (n_3q + 2) % p, "q = {q}, c = {c:?}: N_q = {n_q}, N_3q = {n_3q}");
            let rep = kemnitz_congruence(q as u64, &c, Strategy::Optimized).map_err(|e| e.to_string())?;
            ensure!(rep.n_q == n_q && rep.n_3q == n_3q && rep.holds, "c = {c:?}: library {rep:?}");
        }
    }
    Ok("600 coefficient checks, 600 pair sequences".into())
}

// 10. Counting subsets with a prescribed reciprocal sum.

fn criterion_10() -> Check {
    let mut covers = 0;
    for (name, file) in corpus::<S10File>("s10count") {
        let mut all = file.classes.clone();
        all.insert(0, file.a0);
        let m = multiplicity(&all) as u64;
        let moduli: Vec<u64> = file.classes.iter().map(|c| c.modulus()).collect();
        let total: BigRational = moduli.iter().map(|&n| q(1, n as i64)).sum();
        if m > 3 || total >= BigRational::from_integer(m.into()) {
            continue;
        }
        let k = moduli.len();
        let n0 = file.a0.modulus();
        let mut counts: Vec<u64> = Vec::new();
        for mask in 0..1u64 << k {
            let scaled = bits(mask, k).map(|s| q(1, moduli[s] as i64)).sum::<BigRational>() * BigRational::from_integer(n0.into());
            if scaled.is_integer() {
                let a: usize = scaled.to_integer().try_into().unwrap();
                if counts.len() <= a {
                    counts.resize(a + 1, 0);
                }
                counts[a] += 1;
            }
        }
        let rep = count_unit_fraction_subsets(
            &AugmentedSystem::new(file.a0, CoverSystem::new(file.classes.clone()).unwrap()),
            file.m,
            Strategy::Optimized,
        )
        .map_err(|e| format!("s10count/{name}: {e}"))?;
        let mut a = 0u64;
        while q(a as i64, n0 as i64) <= total {
            let count = counts.get(a as usize).copied().unwrap_or(0);
            let bound = choose(m - 1, a / n0);
            ensure!(BigInt::from(count) >= bound, "s10count/{name}, a = {a}: {count} subsets, bound {bound}");
            let row = rep.rows.iter().find(|r| r.a == a).ok_or_else(|| format!("s10count/{name}: no row for a = {a}"))?;
            ensure!(row.count == count, "s10count/{name}, a = {a}: library count {} vs {count}", row.count);
            a += 1;
        }
        covers += 1;
    }
    ensure!(covers > 0, "no corpus cover has reciprocal sum below m");
    Ok(format!("{covers} corpus covers"))
}

// 11. Optimized and naive paths over the shipped corpus.

fn criterion_11() -> Check {
    let report = run_suite(&corpus_dir(), true).map_err(|e| e.to_string())?;
    let criteria = report.payload["criteria"].as_array().cloned().unwrap_or_default();
    for c in &criteria {
        ensure!(c["status"] == "pass", "suite criterion {} is {}: {}", c["id"], c["status"], c["detail"]);
    }
    ensure!(report.status == Status::Verified, "suite status {:?}", report.status);
    let files: usize = report.payload["theorems"].as_array().unwrap().iter().map(|t| t["instances"].as_u64().unwrap() as usize).sum();
    Ok(format!("{files} corpus files"))
}

/// Runs without the libtest harness so the PASS/FAIL lines are never captured.
fn main() {
    type Criterion = (u32, &'static str, u64, fn() -> Check);
    let criteria: [Criterion; 11] = [
        (1, "subset-evaluation coefficient formula", 10, criterion_1),
        (2, "alternating power sums vanish", 5, criterion_2),
        (3, "binomial divisibility criterion", 5, criterion_3),
        (4, "progression of nonvanishing assignments", 120, criterion_4),
        (5, "prescribed subset sums mod p", 60, criterion_5),
        (6, "all residues from subset sums", 30, criterion_6),
        (7, "character-sum identity", 60, criterion_7),
        (8, "zero-sum congruence", 60, criterion_8),
        (9, "fixed-size zero-sum counts", 120, criterion_9),
        (10, "unit-fraction subset counts", 60, criterion_10),
        (11, "optimized and naive paths agree", 300, criterion_11),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(limit) => Err(format!("{detail}; over the {limit}s budget")),
            other => other,
        };
        match &outcome {
            Ok(detail) => println!("criterion {id:>2} PASS {name} ({detail}; {:.2}s)", elapsed.as_secs_f64()),
            Err(why) => {
                println!("criterion {id:>2} FAIL {name} ({why}; {:.2}s)", elapsed.as_secs_f64());
                failed.push(id);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
