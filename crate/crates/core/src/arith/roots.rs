use serde::{Deserialize, Serialize};

use super::cyclotomic::{CyclotomicElement, CyclotomicField};
use super::galois::GaloisField;
use super::numtheory::{checked_lcm, multiplicative_order, prime_factors};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Which field an instance lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    /// ℚ.
    Rational,
    /// ℤ_p.
    Prime { p: u64 },
    /// GF(p^d).
    Extension { p: u64, d: usize },
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => p,
        }
    }
}

/// A root of unity together with the field that holds it.
#[derive(Clone, Debug)]
pub enum RootOfUnity {
    Cyclotomic { field: CyclotomicField, zeta: CyclotomicElement },
    Galois { field: GaloisField, zeta: Vec<u64> },
}

/// `ζ^n = 1` and `ζ^{n/q} ≠ 1` for every prime `q | n`.
pub fn has_exact_order<R: Ring>(ring: &R, zeta: &R::Elem, n: u64) -> bool {
    let one = ring.one();
    ring.pow(zeta, n) == one && prime_factors(n).into_iter().all(|q| ring.pow(zeta, n / q) != one)
}

/// An element of multiplicative order exactly `n` in ℚ(ζ_n) (characteristic
/// zero) or in the smallest GF(p^d) extending the described field.
pub fn root_of_unity(spec: FieldSpec, n: u64) -> Result<RootOfUnity> {
    if n == 0 {
        return Err(Error::invalid("root order must be positive"));
    }
    let p = spec.characteristic();
    if p != 0 && n.is_multiple_of(p) {
        return Err(Error::NoRootOfUnity { characteristic: p, order: n });
    }
    let root = match spec {
        FieldSpec::Rational => {
            let field = CyclotomicField::new(n)?;
            let zeta = field.generator();
            RootOfUnity::Cyclotomic { field, zeta }
        }
        FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => {
            let base_degree = match spec {
                FieldSpec::Extension { d, .. } => d as u64,
                _ => 1,
            };
            let order_degree = multiplicative_order(p as i64, n)?;
            let d = checked_lcm(base_degree, order_degree)
                .ok_or_else(|| Error::invalid("extension degree overflow"))?;
            let field = GaloisField::new(p, d as usize)?;
            let zeta = galois_root(&field, n);
            RootOfUnity::Galois { field, zeta }
        }
    };
    Ok(root)
}

/// First `g^{(q-1)/n}` of exact order `n`, scanning `g` in index order.
fn galois_root(field: &GaloisField, n: u64) -> Vec<u64> {
    let q = field.order();
    debug_assert_eq!((q - 1) % n, 0);
    let cofactor = (q - 1) / n;
    (1..q)
        .map(|t| field.pow(&field.element_from_index(t), cofactor))
        .find(|z| has_exact_order(field, z, n))
        .expect("the multiplicative group is cyclic")
}
