mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use covsum::arith::{Field, Integers, PrimeField, Rational, Rationals, Ring};
use covsum::poly::{cn_witness, coeff_by_subsets, escott_sum, format_poly, parse_poly, permanent, permanent_naive};
use covsum::Error;

use common::{bits, poly_of, random_terms};

fn field_strategy() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![0u64, 2, 3, 5, 7])
}

/// `Σ_{I⊆J} (−1)^{|J|−|I|} f(𝟙_I)` by direct evaluation.
fn alternating_sum<F: Field>(f: &F, poly: &covsum::poly::MultiPoly<F>, k: usize, j: &[usize]) -> F::Elem {
    let mut total = f.zero();
    for mask in 0..1u64 << j.len() {
        let mut point = vec![f.zero(); k];
        for b in bits(mask, j.len()) {
            point[j[b]] = f.one();
        }
        let v = poly.eval(&point);
        total = if (j.len() - mask.count_ones() as usize).is_multiple_of(2) { f.add(&total, &v) } else { f.sub(&total, &v) };
    }
    total
}

fn formula_case<F: Field>(f: &F, seed: u64, coeff: impl Fn(&F, &mut ChaCha8Rng) -> F::Elem) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=8);
    let j: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
    let terms = rng.gen_range(1..=8);
    let list = random_terms(f, &mut rng, k, j.len(), terms, |r| coeff(f, r));
    let poly = poly_of(f, k, &list);
    let target: Vec<u32> = (0..k).map(|s| u32::from(j.contains(&s))).collect();
    let expected = list.get(&target).cloned().unwrap_or_else(|| f.zero());
    prop_assert_eq!(coeff_by_subsets(&poly, &j).unwrap(), expected);
    Ok(())
}

/// Random polynomials with one term of degree exactly `|J| + 1`; returns
/// whether the alternating sum missed the coefficient.
fn overflow_case<F: Field>(f: &F, rng: &mut ChaCha8Rng) -> bool {
    let k = rng.gen_range(2..=6);
    let j: Vec<usize> = (0..k - 1).collect();
    let mut list = random_terms(f, rng, k, j.len(), 3, |r| f.from_int(r.gen_range(1..5)));
    let mut top = vec![0u32; k];
    for _ in 0..=j.len() {
        top[rng.gen_range(0..k)] += 1;
    }
    list.insert(top, f.from_int(rng.gen_range(1..5)));
    let poly = poly_of(f, k, &list);
    assert!(matches!(coeff_by_subsets(&poly, &j), Err(Error::FormulaInapplicable { .. })));
    let target: Vec<u32> = (0..k).map(|s| u32::from(j.contains(&s))).collect();
    alternating_sum(f, &poly, k, &j) != list.get(&target).cloned().unwrap_or_else(|| f.zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subset_formula_matches_coefficient(p in field_strategy(), seed in any::<u64>()) {
        if p == 0 {
            formula_case(&Rationals, seed, |_, r| Rational::new(r.gen_range(-9..=9), r.gen_range(1..=5)))?;
        } else {
            formula_case(&PrimeField::new(p).unwrap(), seed, |f, r| f.from_int(r.gen_range(-50..50)))?;
        }
    }

    #[test]
    fn subset_formula_matches_alternating_sum(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=7);
        let j: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.7)).collect();
        let list = random_terms(&Rationals, &mut rng, k, j.len(), 6, |r| Rational::from(r.gen_range(-9..=9)));
        let poly = poly_of(&Rationals, k, &list);
        prop_assert_eq!(coeff_by_subsets(&poly, &j).unwrap(), alternating_sum(&Rationals, &poly, k, &j));
    }

    #[test]
    fn escott_sums_vanish_below_k(seed in any::<u64>(), p in field_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=10);
        if p == 0 {
            let c: Vec<_> = (0..k).map(|_| Integers.from_int(rng.gen_range(-10_000..10_000))).collect();
            for n in 0..k as u32 {
                prop_assert!(Integers.is_zero(&escott_sum(&Integers, &c, n).unwrap()));
            }
        } else {
            let f = PrimeField::new(p).unwrap();
            let c: Vec<_> = (0..k).map(|_| f.from_int(rng.gen_range(0..p as i64))).collect();
            for n in 0..k as u32 {
                prop_assert!(f.is_zero(&escott_sum(&f, &c, n).unwrap()));
            }
        }
    }

    #[test]
    fn permanent_matches_permutation_sum(n in 0usize..=7, seed in any::<u64>()) {
        let f = PrimeField::new(11).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m: Vec<Vec<u64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..11)).collect()).collect();
        prop_assert_eq!(permanent(&f, &m).unwrap(), permanent_naive(&f, &m).unwrap());
    }

    #[test]
    fn cn_witness_lies_on_the_grid(seed in any::<u64>(), p in prop::sample::select(vec![0u64, 3, 5, 7])) {
        if p == 0 {
            cn_case(&Rationals, seed)?;
        } else {
            cn_case(&PrimeField::new(p).unwrap(), seed)?;
        }
    }

    #[test]
    fn polynomials_survive_text_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=6);
        let list = random_terms(&Rationals, &mut rng, k, 4, 5, |r| Rational::new(r.gen_range(-9..=9), r.gen_range(1..=4)));
        let poly = poly_of(&Rationals, k, &list);
        let text = format_poly(&poly).unwrap();
        prop_assert_eq!(parse_poly(&Rationals, k, &text).unwrap(), poly);
    }
}

/// A polynomial whose top part is one squarefree monomial over `J`, so the
/// Nullstellensatz hypothesis holds for any two-point sets on `J`.
fn cn_case<F: Field>(f: &F, seed: u64) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=6);
    let j: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.6)).collect();
    let mut list = if j.is_empty() {
        Default::default()
    } else {
        random_terms(f, &mut rng, k, j.len() - 1, 4, |r| f.from_int(r.gen_range(-5..5)))
    };
    let top: Vec<u32> = (0..k).map(|s| u32::from(j.contains(&s))).collect();
    let lead = loop {
        let c = f.from_int(rng.gen_range(1..10));
        if !f.is_zero(&c) {
            break c;
        }
    };
    list.insert(top, lead);
    let poly = poly_of(f, k, &list);
    let grid: Vec<Vec<F::Elem>> = (0..k)
        .map(|s| {
            let b = f.from_int(rng.gen_range(-6..6));
            if j.contains(&s) {
                let c = loop {
                    let c = f.from_int(rng.gen_range(-6..6));
                    if c != b {
                        break c;
                    }
                };
                vec![b, c]
            } else {
                vec![b]
            }
        })
        .collect();
    let w = cn_witness(&poly, &grid, &j).unwrap().expect("a nonvanishing point must exist");
    for s in 0..k {
        prop_assert!(grid[s].contains(&w[s]));
    }
    prop_assert!(!f.is_zero(&poly.eval(&w)));
    Ok(())
}

#[test]
fn formula_needs_its_degree_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for batch in 0..20 {
        let differs = (0..50).filter(|_| overflow_case(&Rationals, &mut rng)).count()
            + (0..50).filter(|_| overflow_case(&PrimeField::new(5).unwrap(), &mut rng)).count();
        assert!(differs > 0, "batch {batch}: the degree bound made no difference");
    }
}
