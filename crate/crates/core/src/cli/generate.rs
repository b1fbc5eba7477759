//! Seeded random instances and the shipped corpus.
//!
//! Every generator draws from a ChaCha stream, so a seed pins the output
//! byte for byte. Instances with theorem hypotheses are rejection-sampled:
//! a draw is kept only if the verifier accepts its hypotheses (whether or
//! not the conclusion then holds).

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::arith::numtheory::gcd;
use crate::arith::{ElemCodec, Field, FieldSpec, GaloisField, PrimeField, Rationals};
use crate::error::{Error, Result};
use crate::poly::{format_poly, MultiPoly};
use crate::residue::{split_with, AugmentedSystem, CoverSystem, ResidueClass, SplitOptions};
use crate::subsetsum::{Strategy, Theorem21Instance};
use crate::zerosum::ZeroSumInstance;

use super::instances::{
    check_instance, C21File, C22File, C23File, C24File, C25File, C33File, KemnitzFile, L41File, S10File, T21File,
    Theorem,
};

/// Shape of a random `m`-cover obtained by refining `m` copies of `0(1)`.
#[derive(Clone, Debug)]
pub struct CoverShape {
    pub m: u64,
    pub factors: Vec<u64>,
    /// Every modulus divides this.
    pub budget: u64,
    pub max_classes: usize,
    pub steps: usize,
}

impl CoverShape {
    pub fn new(m: u64, factors: &[u64], budget: u64, max_classes: usize) -> CoverShape {
        CoverShape { m, factors: factors.to_vec(), budget, max_classes, steps: 4 * max_classes }
    }
}

/// Refines `m` copies of `0(1)`, so the covering function is identically `m`
/// and every class is essential.
pub fn random_cover<G: Rng>(rng: &mut G, shape: &CoverShape) -> Result<CoverSystem> {
    if shape.m == 0 || shape.m as usize > shape.max_classes {
        return Err(Error::invalid(format!("cannot fit a {}-cover in {} classes", shape.m, shape.max_classes)));
    }
    let base = CoverSystem::from_pairs(&vec![(0, 1); shape.m as usize])?;
    let steps = rng.gen_range(0..=shape.steps);
    let opts = SplitOptions {
        factors: shape.factors.clone(),
        modulus_budget: Some(shape.budget),
        max_classes: Some(shape.max_classes),
    };
    let sys = split_with(&base, rng, steps, &opts)?;
    if !sys.is_m_cover(shape.m) {
        return Err(Error::invalid("refinement lost coverage"));
    }
    Ok(sys)
}

/// Moves a random class `t` whose presented residue attains `m(A)` out of
/// the system to serve as `a_0(n_0)`.
pub fn augment<G: Rng>(rng: &mut G, sys: &CoverSystem) -> Result<AugmentedSystem> {
    let m = sys.covering_multiplicity() as usize;
    let candidates: Vec<usize> =
        (0..sys.len()).filter(|&t| sys.covering_function(sys.classes()[t].presented()) == m).collect();
    let &t = candidates.choose(rng).ok_or_else(|| Error::invalid("no class attains the multiplicity"))?;
    Ok(AugmentedSystem::new(sys.classes()[t], sys.without(t)))
}

pub fn coprime_multiplier<G: Rng>(rng: &mut G, n: u64) -> i64 {
    loop {
        let m = rng.gen_range(1..=2 * n as i64 + 1) * if rng.gen_bool(0.2) { -1 } else { 1 };
        if gcd(m as i128, n as i128) == 1 {
            return m;
        }
    }
}

fn multipliers<G: Rng>(rng: &mut G, moduli: &[u64]) -> Vec<i64> {
    moduli.iter().map(|&n| coprime_multiplier(rng, n)).collect()
}

fn small_elem<F: Field, G: Rng>(f: &F, rng: &mut G) -> F::Elem {
    let num = f.from_int(rng.gen_range(-4..=4));
    if f.characteristic() == 0 && rng.gen_bool(0.25) {
        f.div(&num, &f.from_int(rng.gen_range(2..=3))).expect("nonzero")
    } else {
        num
    }
}

fn distinct_pair<F: Field, G: Rng>(f: &F, rng: &mut G) -> (F::Elem, F::Elem) {
    loop {
        let (b, c) = (small_elem(f, rng), small_elem(f, rng));
        if b != c {
            return (b, c);
        }
    }
}

fn pair_json<F: ElemCodec>(f: &F, (b, c): &(F::Elem, F::Elem)) -> [Value; 2] {
    [f.elem_to_json(b), f.elem_to_json(c)]
}

/// Random sparse polynomial in `k` variables of degree exactly `deg`
/// (zero when `deg` is `None`), exponents at most 2.
pub fn random_poly<F: Field, G: Rng>(f: &F, rng: &mut G, k: usize, deg: Option<usize>, terms: usize) -> MultiPoly<F> {
    let mut p = MultiPoly::zero(f.clone(), k);
    let Some(deg) = deg else { return p };
    loop {
        for _ in 0..terms.max(1) {
            let d = rng.gen_range(0..=deg);
            let mut e = vec![0u32; k];
            for _ in 0..d {
                if k == 0 {
                    break;
                }
                let v = rng.gen_range(0..k);
                if e[v] < 2 {
                    e[v] += 1;
                }
            }
            let c = small_elem(f, rng);
            p.add_term(e, c);
        }
        if p.degree() == Some(deg) {
            return p;
        }
    }
}

fn t21_draw<F: Field + ElemCodec, G: Rng>(f: &F, spec: FieldSpec, rng: &mut G) -> Result<T21File> {
    let shapes: &[(&[u64], u64)] = &[(&[2, 3], 24), (&[2, 5], 20), (&[3], 9), (&[2], 16), (&[2, 7], 14)];
    let p = f.characteristic();
    loop {
        let &(factors, budget) = shapes.choose(rng).expect("nonempty");
        if p != 0 && budget % p == 0 {
            continue;
        }
        let m = if rng.gen_bool(0.1) { 1 } else { rng.gen_range(2..=4) };
        let sys = random_cover(rng, &CoverShape::new(m, factors, budget, 13))?;
        let aug = augment(rng, &sys)?;
        let k = aug.tail.len();
        let mults = multipliers(rng, &aug.tail.moduli());
        let mut covering = aug.tail_indices_containing_a0();
        covering.shuffle(rng);
        let j_len = if covering.is_empty() { 0 } else { rng.gen_range(1..=covering.len()) };
        let mut j: Vec<usize> = covering[..j_len].to_vec();
        j.sort_unstable();
        // h = |J| − deg P must stay below the characteristic so h! survives.
        let lowest = if p == 0 { 0 } else { j_len.saturating_sub(p as usize - 1) };
        let deg = if j_len == 0 || rng.gen_bool(0.6) { j_len } else { rng.gen_range(lowest.max(1)..=j_len) };
        let terms = rng.gen_range(0..4);
        let mut poly = random_poly(f, rng, k, deg.checked_sub(1), terms);
        if deg > 0 && rng.gen_bool(0.4) {
            // A top-degree term that may sit outside J or repeat a variable.
            let mut e = vec![0u32; k];
            let mut left = deg;
            while left > 0 {
                let v = rng.gen_range(0..k);
                if e[v] < 2 {
                    e[v] += 1;
                    left -= 1;
                }
            }
            let c = small_elem(f, rng);
            poly.add_term(e, c);
        }
        let mut lead = j.clone();
        lead.shuffle(rng);
        let mut e = vec![0u32; k];
        for &s in &lead[..deg] {
            e[s] = 1;
        }
        let c = loop {
            let c = small_elem(f, rng);
            if !f.is_zero(&c) {
                break c;
            }
        };
        poly.add_term(e, c);
        let x: Vec<(F::Elem, F::Elem)> = (0..k)
            .map(|s| {
                if covering[j_len..].contains(&s) && rng.gen_bool(0.2) {
                    let b = small_elem(f, rng);
                    (b.clone(), b)
                } else {
                    distinct_pair(f, rng)
                }
            })
            .collect();
        let inst = Theorem21Instance { system: aug.clone(), multipliers: mults.clone(), j: j.clone(), p: poly, x };
        if inst.check().is_err() {
            continue;
        }
        return Ok(T21File {
            field: spec,
            a0: aug.a0,
            classes: aug.tail.classes().to_vec(),
            multipliers: Some(mults),
            j: j.iter().map(|s| s + 1).collect(),
            p: format_poly(&inst.p)?,
            x: inst.x.iter().map(|pr| pair_json(f, pr)).collect(),
        });
    }
}

/// A random `t21` instance over `spec` that passes every hypothesis check.
pub fn t21_instance(seed: u64, spec: FieldSpec) -> Result<T21File> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match spec {
        FieldSpec::Rational => t21_draw(&Rationals, spec, &mut rng),
        FieldSpec::Prime { p } => t21_draw(&PrimeField::new(p)?, spec, &mut rng),
        FieldSpec::Extension { p, d } => t21_draw(&GaloisField::new(p, d)?, spec, &mut rng),
    }
}

/// A random `m`-cover with at most `max_classes` classes whose moduli divide
/// `budget`.
pub fn m_cover(seed: u64, m: u64, max_classes: usize, budget: u64) -> Result<CoverSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factors: Vec<u64> = crate::arith::numtheory::prime_factors(budget).into_iter().collect();
    if factors.is_empty() {
        return CoverSystem::from_pairs(&vec![(0, 1); m as usize]);
    }
    random_cover(&mut rng, &CoverShape::new(m, &factors, budget, max_classes))
}

/// A random zero-sum instance with `k = Σ(p^{h_t} − 1) + extra`.
pub fn zero_sum(seed: u64, p: u64, h: &[u32], extra: usize) -> ZeroSumInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold: usize = h.iter().map(|&h| p.pow(h) as usize - 1).sum();
    ZeroSumInstance::random(&mut rng, p, h, threshold + extra)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("instances serialize")
}

/// Draws until `make` yields an instance whose hypotheses the verifier
/// accepts.
fn accepted<G: Rng>(rng: &mut G, theorem: Theorem, mut make: impl FnMut(&mut G) -> Result<Value>) -> Result<Value> {
    for _ in 0..500 {
        let v = make(rng)?;
        if check_instance(theorem, &v, Strategy::Optimized).is_ok() {
            return Ok(v);
        }
    }
    Err(Error::invalid(format!("no {} instance found in 500 draws", theorem.name())))
}

fn c21_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let alpha_zero = rng.gen_bool(0.3);
    let m = rng.gen_range(1..=3);
    let sys = random_cover(rng, &CoverShape::new(m, &[2, 3], 12, 10))?;
    let aug = augment(rng, &sys)?;
    let moduli = aug.tail.moduli();
    let (field, mults, x) = if alpha_zero {
        let x = moduli.iter().map(|&n| [Value::from(0), Value::from(format!("1/{n}"))]).collect();
        (FieldSpec::Rational, vec![1; moduli.len()], x)
    } else {
        let spec = *[FieldSpec::Rational, FieldSpec::Prime { p: 5 }, FieldSpec::Prime { p: 7 }].choose(rng).unwrap();
        let x = match spec {
            FieldSpec::Prime { p } => {
                let f = PrimeField::new(p)?;
                moduli.iter().map(|_| pair_json(&f, &distinct_pair(&f, rng))).collect()
            }
            _ => moduli.iter().map(|_| pair_json(&Rationals, &distinct_pair(&Rationals, rng))).collect(),
        };
        (spec, multipliers(rng, &moduli), x)
    };
    Ok(to_value(&C21File {
        field,
        a0: aug.a0,
        classes: aug.tail.classes().to_vec(),
        multipliers: Some(mults),
        x,
        assert_alpha_zero: alpha_zero,
    }))
}

/// `p` copies of `0(1)`, the setting of the unit-coefficient subset-sum
/// question.
pub fn wu_instance<G: Rng>(rng: &mut G, p: u64) -> C22File {
    C22File {
        p,
        a0: ResidueClass::new(0, 1).expect("valid"),
        classes: vec![ResidueClass::new(0, 1).expect("valid"); p as usize - 1],
        multipliers: None,
        c_coeffs: (1..p).map(|_| rng.gen_range(1..p)).collect(),
        c: rng.gen_range(0..p),
    }
}

fn c22_draw(rng: &mut ChaCha8Rng, i: usize) -> Result<Value> {
    let (p, factors, budget): (u64, &[u64], u64) = match i % 4 {
        0 => (2, &[3], 9),
        1 => (3, &[2], 8),
        2 => (5, &[2, 3], 12),
        _ => (3, &[2, 5], 20),
    };
    if i < 4 {
        return Ok(to_value(&wu_instance(rng, [2, 3, 5, 7][i])));
    }
    let sys = random_cover(rng, &CoverShape::new(p, factors, budget, 11))?;
    let aug = augment(rng, &sys)?;
    let k = aug.tail.len();
    Ok(to_value(&C22File {
        p,
        a0: aug.a0,
        classes: aug.tail.classes().to_vec(),
        multipliers: Some(multipliers(rng, &aug.tail.moduli())),
        c_coeffs: (0..k).map(|_| rng.gen_range(1..p)).collect(),
        c: rng.gen_range(0..p),
    }))
}

fn c23_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let total = rng.gen_range(2..=3);
    let sys = random_cover(rng, &CoverShape::new(total, &[2, 3], 12, 9))?;
    let aug = augment(rng, &sys)?;
    let k = aug.tail.len();
    let rows = total as usize - 1;
    let spec = *[FieldSpec::Rational, FieldSpec::Prime { p: 5 }, FieldSpec::Prime { p: 7 }].choose(rng).unwrap();
    macro_rules! fill {
        ($f:expr) => {{
            let f = $f;
            let matrix = (0..rows).map(|_| (0..k).map(|_| f.elem_to_json(&small_elem(&f, rng))).collect()).collect();
            let b = (0..rows).map(|_| f.elem_to_json(&small_elem(&f, rng))).collect();
            let x = (0..k).map(|_| pair_json(&f, &distinct_pair(&f, rng))).collect();
            (matrix, b, x)
        }};
    }
    let (matrix, b, x) = match spec {
        FieldSpec::Prime { p } => fill!(PrimeField::new(p)?),
        _ => fill!(Rationals),
    };
    let mults = multipliers(rng, &aug.tail.moduli());
    Ok(to_value(&C23File {
        field: spec,
        a0: aug.a0,
        classes: aug.tail.classes().to_vec(),
        multipliers: Some(mults),
        matrix,
        b,
        x,
    }))
}

fn c24_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let total = rng.gen_range(1..=3);
    let p = *[5u64, 7].choose(rng).unwrap();
    let sys = random_cover(rng, &CoverShape::new(total, &[2, 3], 12, if p == 5 { 9 } else { 8 }))?;
    let aug = augment(rng, &sys)?;
    let k = aug.tail.len();
    let f = PrimeField::new(p)?;
    let rows = total as usize - 1;
    Ok(to_value(&C24File {
        field: FieldSpec::Prime { p },
        a0: aug.a0,
        classes: aug.tail.classes().to_vec(),
        multipliers: Some(multipliers(rng, &aug.tail.moduli())),
        matrix: (0..rows).map(|_| (0..k).map(|_| Value::from(rng.gen_range(0..p))).collect()).collect(),
        b: (0..rows).map(|_| f.elem_to_json(&rng.gen_range(0..p))).collect(),
    }))
}

fn c25_draw(rng: &mut ChaCha8Rng, i: usize) -> Result<Value> {
    if i < 7 {
        // The trivial cover {r(n)}, n = 2..8.
        let n = i as u64 + 2;
        let classes = (0..n as i64).map(|r| ResidueClass::new(r, n)).collect::<Result<Vec<_>>>()?;
        let mults = multipliers(rng, &vec![n; n as usize - 1]);
        return Ok(to_value(&C25File { classes, multipliers: Some(mults), j: vec![] }));
    }
    let m = rng.gen_range(1..=3);
    let sys = random_cover(rng, &CoverShape::new(m, &[2, 3], 24, 12))?;
    let n = sys.period();
    let Some(last) = sys.classes().iter().position(|c| c.modulus() == n) else {
        return Err(Error::invalid("retry"));
    };
    let mut classes = sys.classes().to_vec();
    let c = classes.remove(last);
    classes.push(c);
    let moduli: Vec<u64> = classes[..classes.len() - 1].iter().map(|c| c.modulus()).collect();
    let k_set: Vec<usize> = (0..moduli.len()).filter(|&s| classes[s].contains(c.presented())).collect();
    let j = k_set.into_iter().filter(|_| rng.gen_bool(0.5)).map(|s| s + 1).collect();
    let plain = rng.gen_bool(0.3);
    let mults = if plain { vec![1; moduli.len()] } else { multipliers(rng, &moduli) };
    Ok(to_value(&C25File { classes, multipliers: Some(mults), j }))
}

fn l41_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let m = rng.gen_range(1..=3);
    let sys = random_cover(rng, &CoverShape::new(m, &[2, 3], 12, 8))?;
    let k = sys.len();
    let m = sys.covering_multiplicity() as usize;
    let spec = *[FieldSpec::Rational, FieldSpec::Rational, FieldSpec::Prime { p: 5 }, FieldSpec::Prime { p: 7 }]
        .choose(rng)
        .unwrap();
    let deg = if rng.gen_bool(0.1) { None } else { Some(rng.gen_range(0..=m)) };
    let terms = rng.gen_range(1..5);
    let f = match spec {
        FieldSpec::Prime { p } => format_poly(&random_poly(&PrimeField::new(p)?, rng, k, deg, terms))?,
        _ => format_poly(&random_poly(&Rationals, rng, k, deg, terms))?,
    };
    let mults = if rng.gen_bool(0.8) {
        multipliers(rng, &sys.moduli())
    } else {
        sys.moduli().iter().map(|_| rng.gen_range(-6..=6)).collect()
    };
    Ok(to_value(&L41File { field: spec, classes: sys.classes().to_vec(), multipliers: Some(mults), f }))
}

fn t32_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    loop {
        let p = *[2u64, 3].choose(rng).unwrap();
        let l = rng.gen_range(1..=2);
        let h: Vec<u32> = (0..l).map(|_| rng.gen_range(1..=2)).collect();
        let threshold: usize = h.iter().map(|&h| p.pow(h) as usize - 1).sum();
        if threshold > 12 {
            continue;
        }
        let extra = if threshold >= 12 || rng.gen_bool(0.6) { 0 } else { rng.gen_range(1..=12 - threshold.min(11)) };
        return Ok(to_value(&ZeroSumInstance::random(rng, p, &h, threshold + extra)));
    }
}

fn c33_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let &(p, h) = [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)].choose(rng).unwrap();
    let q = p.pow(h) as i64;
    let c = (0..2 * q - 2).map(|_| rng.gen_range(-2 * q..2 * q)).collect();
    Ok(to_value(&C33File { p, h, c, target: rng.gen_range(0..q) }))
}

fn kemnitz_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let q = *[2u64, 3, 4].choose(rng).unwrap() as i64;
    let c = (0..4 * q - 2).map(|_| (rng.gen_range(0..q), rng.gen_range(0..q))).collect();
    Ok(to_value(&KemnitzFile { q: q as u64, c }))
}

fn s10_draw(rng: &mut ChaCha8Rng) -> Result<Value> {
    let &(factors, budget) = [(&[2u64, 3][..], 24u64), (&[2, 5][..], 20), (&[3][..], 27)].choose(rng).unwrap();
    let m = rng.gen_range(1..=3);
    let sys = random_cover(rng, &CoverShape::new(m, factors, budget, 14))?;
    let aug = augment(rng, &sys)?;
    Ok(to_value(&S10File { a0: aug.a0, classes: aug.tail.classes().to_vec(), m: None }))
}

/// Number of instances per theorem in the shipped corpus.
pub fn corpus_plan() -> Vec<(Theorem, usize)> {
    vec![
        (Theorem::T21, 120),
        (Theorem::C21, 12),
        (Theorem::C22, 16),
        (Theorem::C23, 10),
        (Theorem::C24, 8),
        (Theorem::C25, 15),
        (Theorem::L41, 20),
        (Theorem::T32, 30),
        (Theorem::C33, 20),
        (Theorem::Kemnitz, 20),
        (Theorem::S10count, 12),
    ]
}

/// Instance `i` of `theorem` in the corpus generated from `seed`.
pub fn corpus_instance(theorem: Theorem, i: usize, seed: u64) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (theorem as u64) << 32 ^ i as u64);
    match theorem {
        Theorem::T21 => {
            let spec = [FieldSpec::Rational, FieldSpec::Prime { p: 5 }, FieldSpec::Prime { p: 7 }, FieldSpec::Prime { p: 11 }]
                [i % 4];
            Ok(to_value(&t21_instance(rng.gen(), spec)?))
        }
        Theorem::C21 => accepted(&mut rng, theorem, c21_draw),
        Theorem::C22 => accepted(&mut rng, theorem, |r| c22_draw(r, i)),
        Theorem::C23 => accepted(&mut rng, theorem, c23_draw),
        Theorem::C24 => accepted(&mut rng, theorem, c24_draw),
        Theorem::C25 => {
            for _ in 0..500 {
                if let Ok(v) = c25_draw(&mut rng, i) {
                    if check_instance(theorem, &v, Strategy::Optimized).is_ok() {
                        return Ok(v);
                    }
                }
            }
            Err(Error::invalid("no c25 instance found in 500 draws"))
        }
        Theorem::L41 => accepted(&mut rng, theorem, l41_draw),
        Theorem::T32 => t32_draw(&mut rng),
        Theorem::C33 => c33_draw(&mut rng),
        Theorem::Kemnitz => kemnitz_draw(&mut rng),
        Theorem::S10count => accepted(&mut rng, theorem, s10_draw),
    }
}

/// Pretty JSON with a trailing newline, as written to corpus files.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Every corpus file as `(relative path, contents)`.
pub fn corpus_files(seed: u64) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (theorem, count) in corpus_plan() {
        for i in 0..count {
            let v = corpus_instance(theorem, i, seed)?;
            out.push((format!("{}/{i:03}.json", theorem.name()), render(&v)));
        }
    }
    Ok(out)
}

pub fn write_corpus(dir: &Path, seed: u64) -> Result<usize> {
    let files = corpus_files(seed)?;
    for (rel, text) in &files {
        let path = dir.join(rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent).map_err(|e| Error::invalid(format!("{}: {e}", parent.display())))?;
        }
        std::fs::write(&path, text).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
    }
    Ok(files.len())
}
