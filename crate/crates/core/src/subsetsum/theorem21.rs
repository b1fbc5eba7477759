use serde::Serialize;

use crate::arith::{ElemCodec, Field, Rational};
use crate::error::{Error, Result, ViolationCode};
use crate::poly::MultiPoly;
use crate::residue::AugmentedSystem;

use super::assignments::{choose_offset, tabulate};
use super::checks::{characteristic_coprime, progression_denom, same_len};
use super::kernel::{Strategy, SubsetRecord, Weights};
use super::progression::{alpha_of, progression_numerators};

/// An augmented system, multipliers, a set `J` of tail indices (0-based), a
/// polynomial `P` and pairs `X_s = {b_s, c_s}`.
#[derive(Clone, Debug)]
pub struct Theorem21Instance<F: Field> {
    pub system: AugmentedSystem,
    pub multipliers: Vec<i64>,
    pub j: Vec<usize>,
    pub p: MultiPoly<F>,
    pub x: Vec<(F::Elem, F::Elem)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem21Report {
    pub alpha: Rational,
    pub n0: u64,
    /// `|J| − deg P + 1`.
    pub bound: usize,
    /// `|S_r|` for `r = 0, …, n_0 − 1`.
    pub sizes: Vec<usize>,
    /// Least-mask assignment in each `S_r` (bits mark `x_s = c_s`).
    pub witnesses: Vec<Option<SubsetRecord>>,
    pub theorem_holds: bool,
    pub assignments: u64,
    pub nonvanishing: u64,
}

/// `[∏_{j∈J} x_j] P·(x_1 + ⋯ + x_k)^h` with `h = |J| − deg P`.
///
/// Only the top-degree squarefree terms of `P` supported inside `J` can
/// reach the target monomial, each with multinomial weight `h!`.
pub fn eq21_coefficient<F: Field>(p: &MultiPoly<F>, j: &[usize]) -> F::Elem {
    let ring = p.ring();
    let Some(deg) = p.degree() else {
        return ring.zero();
    };
    if deg > j.len() {
        return ring.zero();
    }
    let in_j = |s: usize| j.contains(&s);
    let mut top = ring.zero();
    for (e, c) in p.terms() {
        let squarefree_in_j = e.iter().enumerate().all(|(s, &k)| k == 0 || (k == 1 && in_j(s)));
        if squarefree_in_j && e.iter().map(|&k| k as usize).sum::<usize>() == deg {
            top = ring.add(&top, c);
        }
    }
    let h = j.len() - deg;
    let fact = (1..=h as i64).fold(ring.one(), |acc, i| ring.mul(&acc, &ring.from_int(i)));
    ring.mul(&top, &fact)
}

impl<F: Field> Theorem21Instance<F> {
    /// Checks every hypothesis, naming the first one that fails.
    pub fn check(&self) -> Result<()> {
        let k = self.system.tail.len();
        same_len("multipliers", self.multipliers.len(), k)?;
        same_len("pairs X_s", self.x.len(), k)?;
        same_len("variables of P", self.p.nvars(), k)?;
        Weights::for_system(&self.system.tail, &self.multipliers)?.require_coprime()?;

        let full = self.system.full()?;
        let a0 = self.system.a0_point();
        let (w, m) = (full.covering_function(a0) as u64, full.covering_multiplicity());
        if w != m {
            return Err(Error::violation(ViolationCode::A0NotMinimal, format!("w(a_0) = {w} but m(A_0) = {m}")));
        }
        let covering = self.system.tail_indices_containing_a0();
        for &s in &self.j {
            if s >= k || !covering.contains(&s) {
                return Err(Error::violation(
                    ViolationCode::JNotCovering,
                    format!("index {} of J does not cover a_0 = {a0}", s + 1),
                ));
            }
        }
        let mut sorted = self.j.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.j.len() {
            return Err(Error::invalid("J repeats an index"));
        }
        for (s, (b, c)) in self.x.iter().enumerate() {
            if b == c && (!covering.contains(&s) || self.j.contains(&s)) {
                return Err(Error::violation(
                    ViolationCode::DegeneratePair,
                    format!("b_{0} = c_{0} requires a_0 in class {0} and {0} outside J", s + 1),
                ));
            }
        }
        characteristic_coprime(self.p.ring().characteristic(), &self.system.tail.moduli())?;
        match self.p.degree() {
            None => return Err(Error::violation(ViolationCode::DegreeBound, "P is the zero polynomial")),
            Some(d) if d > self.j.len() => {
                return Err(Error::violation(ViolationCode::DegreeBound, format!("deg P = {d} > |J| = {}", self.j.len())))
            }
            Some(_) => {}
        }
        if self.p.ring().is_zero(&eq21_coefficient(&self.p, &self.j)) {
            return Err(Error::violation(ViolationCode::CoeffZero, "coefficient of the top subset monomial vanishes"));
        }
        Ok(())
    }
}

/// Enumerates every assignment, builds the sets `S_r` and reports the least
/// `α` with `|S_r| ≥ |J| − deg P + 1` for all `r`.
///
/// An index with `b_s = c_s` is never counted in the fractional sum.
pub fn verify_theorem21<F: Field + ElemCodec>(inst: &Theorem21Instance<F>, strategy: Strategy) -> Result<Theorem21Report> {
    inst.check()?;
    let field = inst.p.ring();
    let n0 = inst.system.a0.modulus();
    let denom = progression_denom(&inst.system.tail, n0)?;
    let weights = Weights::new(&inst.system.tail.moduli(), &inst.multipliers, Some(denom))?;
    let table = tabulate(field, &weights, &inst.x, |pt| !field.is_zero(&inst.p.eval(pt)), strategy)?;

    let bound = inst.j.len() - inst.p.degree().expect("checked nonzero") + 1;
    let choice = choose_offset(n0, denom, bound, |v| table.size(v));
    let witnesses = progression_numerators(choice.t, n0, denom)
        .map(|v| table.least_mask(v).map(|m| weights.record(m)))
        .collect();
    Ok(Theorem21Report {
        alpha: alpha_of(choice.t, n0, denom),
        n0,
        bound,
        sizes: choice.sizes,
        witnesses,
        theorem_holds: choice.holds,
        assignments: table.visited,
        nonvanishing: table.accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use crate::poly::parse_poly;
    use crate::residue::{CoverSystem, ResidueClass};

    fn aug(a0: (i64, u64), tail: &[(i64, u64)]) -> AugmentedSystem {
        AugmentedSystem::new(ResidueClass::new(a0.0, a0.1).unwrap(), CoverSystem::from_pairs(tail).unwrap())
    }

    #[test]
    fn basic_lemma_case() {
        // All moduli 1, P = 1, J = ∅: some sum exists.
        let inst = Theorem21Instance {
            system: aug((0, 1), &[(0, 1), (0, 1)]),
            multipliers: vec![1, 1],
            j: vec![],
            p: MultiPoly::one(Rationals, 2),
            x: vec![(Rational::from(0), Rational::from(1)), (Rational::from(0), Rational::from(2))],
        };
        let rep = verify_theorem21(&inst, Strategy::Optimized).unwrap();
        assert!(rep.theorem_holds);
        assert_eq!(rep.bound, 1);
        assert_eq!(rep.sizes, vec![4]);
    }

    #[test]
    fn two_class_tail() {
        let q = |a, b| Rational::new(a, b);
        let inst = Theorem21Instance {
            system: aug((0, 1), &[(0, 2), (1, 2)]),
            multipliers: vec![1, 1],
            j: vec![0],
            p: MultiPoly::one(Rationals, 2),
            x: vec![(q(0, 1), q(1, 2)), (q(0, 1), q(1, 2))],
        };
        let rep = verify_theorem21(&inst, Strategy::Optimized).unwrap();
        assert!(rep.theorem_holds);
        assert_eq!(rep.bound, 2);
        assert!(rep.sizes[0] >= 2);
        assert_eq!(rep, verify_theorem21(&inst, Strategy::Naive).unwrap());
    }

    #[test]
    fn hypotheses_are_named() {
        let base = Theorem21Instance {
            system: aug((0, 1), &[(0, 2), (1, 2)]),
            multipliers: vec![1, 1],
            j: vec![0],
            p: MultiPoly::one(Rationals, 2),
            x: vec![(Rational::from(0), Rational::from(1)), (Rational::from(0), Rational::from(1))],
        };
        let code = |i: &Theorem21Instance<Rationals>| i.check().unwrap_err().violation_code();

        let mut i = base.clone();
        i.multipliers = vec![2, 1];
        assert_eq!(code(&i), Some(ViolationCode::MultiplierNotCoprime));

        let mut i = base.clone();
        i.system = aug((1, 2), &[(0, 2), (1, 2), (1, 2)]);
        i.multipliers = vec![1, 1, 1];
        i.x.push((Rational::from(0), Rational::from(1)));
        i.p = MultiPoly::one(Rationals, 3);
        assert_eq!(code(&i), Some(ViolationCode::A0NotMinimal));

        let mut i = base.clone();
        i.j = vec![1];
        assert_eq!(code(&i), Some(ViolationCode::JNotCovering));

        let mut i = base.clone();
        i.x[1] = (Rational::from(3), Rational::from(3));
        assert_eq!(code(&i), Some(ViolationCode::DegeneratePair));

        let mut i = base.clone();
        i.p = parse_poly(&Rationals, 2, "x1*x2").unwrap();
        assert_eq!(code(&i), Some(ViolationCode::DegreeBound));

        let mut i = base.clone();
        i.p = parse_poly(&Rationals, 2, "x2").unwrap();
        assert_eq!(code(&i), Some(ViolationCode::CoeffZero));

        let f2 = PrimeField::new(2).unwrap();
        let i = Theorem21Instance {
            system: base.system.clone(),
            multipliers: vec![1, 1],
            j: vec![0],
            p: MultiPoly::one(f2, 2),
            x: vec![(0, 1), (0, 1)],
        };
        assert_eq!(i.check().unwrap_err().violation_code(), Some(ViolationCode::CharacteristicDividesModulus));
    }

    #[test]
    fn eq21_coefficient_matches_expansion() {
        let r = Rationals;
        let p = parse_poly(&r, 3, "2*x1 + 3*x2 - x3 + 5").unwrap();
        let j = [0usize, 1];
        let sum = parse_poly(&r, 3, "x1 + x2 + x3").unwrap();
        let expanded = p.mul(&sum);
        assert_eq!(eq21_coefficient(&p, &j), expanded.squarefree_coeff(0b011));
        assert_eq!(eq21_coefficient(&p, &j), Rational::from(5));
    }
}
