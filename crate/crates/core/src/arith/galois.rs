//! GF(p^d) as ℤ_p[x]/(f) with `f` the lexicographically first monic
//! irreducible polynomial of degree `d`.

use std::sync::Arc;

use num_bigint::BigInt;

use super::numtheory::{is_prime, prime_factors};
use super::ring::{reduce_bigint, ElemCodec, Field, Ring};
use super::Rational;
use crate::error::{Error, Result};

/// Polynomial over ℤ_p, low degree first, no trailing zeros.
type Fpx = Vec<u64>;

fn trim(a: &mut Fpx) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    super::numtheory::pow_mod(a, p - 2, p)
}

fn fpx_mul(a: &[u64], b: &[u64], p: u64) -> Fpx {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn fpx_rem(a: &[u64], m: &[u64], p: u64) -> Fpx {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        for (j, &mj) in m.iter().enumerate() {
            let idx = top - dm + j;
            r[idx] = (r[idx] + p - c * mj % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn fpx_gcd(a: &[u64], b: &[u64], p: u64) -> Fpx {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = fpx_rem(&x, &y, p);
        x = std::mem::replace(&mut y, r);
    }
    x
}

fn fpx_powmod(base: &[u64], mut e: BigInt, m: &[u64], p: u64) -> Fpx {
    use num_traits::{One, Zero};
    let mut acc: Fpx = vec![1];
    let mut b = fpx_rem(base, m, p);
    let two = BigInt::from(2);
    while !e.is_zero() {
        if (&e % &two).is_one() {
            acc = fpx_rem(&fpx_mul(&acc, &b, p), m, p);
        }
        e /= &two;
        if !e.is_zero() {
            b = fpx_rem(&fpx_mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Rabin's test: `f` of degree `d` is irreducible iff `x^{p^d} ≡ x (mod f)`
/// and `gcd(x^{p^{d/q}} - x, f) = 1` for each prime `q | d`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x: Fpx = vec![0, 1];
    let frob = |k: usize| fpx_powmod(&x, BigInt::from(p).pow(k as u32), f, p);
    let sub_x = |mut a: Fpx| {
        a.resize(a.len().max(2), 0);
        a[1] = (a[1] + p - 1) % p;
        trim(&mut a);
        a
    };
    if !sub_x(frob(d)).is_empty() {
        return false;
    }
    for q in prime_factors(d as u64) {
        let g = fpx_gcd(&sub_x(frob(d / q as usize)), f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Monic irreducible polynomial of degree `d` over ℤ_p, the first in
/// increasing order of `Σ c_i p^i` over its lower coefficients.
pub fn first_irreducible(p: u64, d: usize) -> Result<Fpx> {
    let count = p
        .checked_pow(d as u32)
        .ok_or_else(|| Error::invalid(format!("GF({p}^{d}) is too large")))?;
    for t in 0..count {
        let mut f = Vec::with_capacity(d + 1);
        let mut rest = t;
        for _ in 0..d {
            f.push(rest % p);
            rest /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    d: usize,
    modulus: Arc<Fpx>,
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl GaloisField {
    pub fn new(p: u64, d: usize) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::invalid(format!("{p} is not a supported prime")));
        }
        if d == 0 {
            return Err(Error::invalid("extension degree must be positive"));
        }
        match p.checked_pow(d as u32) {
            Some(q) if q < 1 << 62 => {}
            _ => return Err(Error::invalid(format!("GF({p}^{d}) is too large"))),
        }
        let modulus = Arc::new(first_irreducible(p, d)?);
        Ok(GaloisField { p, d, modulus })
    }

    pub fn characteristic_prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.d as u32)
    }

    pub fn defining_polynomial(&self) -> &[u64] {
        &self.modulus
    }

    /// Element whose coefficient vector is the base-p digits of `t`.
    pub fn element_from_index(&self, mut t: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            v.push(t % self.p);
            t /= self.p;
        }
        v
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> Vec<u64> {
        let raw: Fpx = coeffs.iter().map(|&c| c.rem_euclid(self.p as i64) as u64).collect();
        self.pad(fpx_rem(&raw, &self.modulus, self.p))
    }

    fn pad(&self, mut v: Fpx) -> Vec<u64> {
        v.resize(self.d, 0);
        v
    }

    /// True iff the element lies in the prime subfield.
    pub fn is_prime_subfield(&self, e: &[u64]) -> bool {
        e[1..].iter().all(|&c| c == 0)
    }
}

impl Ring for GaloisField {
    type Elem = Vec<u64>;

    fn zero(&self) -> Vec<u64> {
        vec![0; self.d]
    }
    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.d];
        v[0] = 1;
        v
    }
    fn add(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }
    fn sub(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }
    fn mul(&self, a: &Vec<u64>, b: &Vec<u64>) -> Vec<u64> {
        self.pad(fpx_rem(&fpx_mul(a, b, self.p), &self.modulus, self.p))
    }
    fn neg(&self, a: &Vec<u64>) -> Vec<u64> {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }
    fn from_bigint(&self, n: &BigInt) -> Vec<u64> {
        let mut v = vec![0; self.d];
        v[0] = reduce_bigint(n, self.p);
        v
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for GaloisField {
    fn inv(&self, a: &Vec<u64>) -> Option<Vec<u64>> {
        if a.iter().all(|&c| c == 0) {
            None
        } else {
            Some(self.pow(a, self.order() - 2))
        }
    }
}

impl ElemCodec for GaloisField {
    fn parse_scalar(&self, s: &str) -> Option<Vec<u64>> {
        let q: Rational = s.parse().ok()?;
        self.from_rational(&q)
    }

    fn format_scalar(&self, e: &Vec<u64>) -> Option<String> {
        self.is_prime_subfield(e).then(|| e[0].to_string())
    }

    fn elem_from_json(&self, v: &serde_json::Value) -> Option<Vec<u64>> {
        match v {
            serde_json::Value::Array(items) => {
                let coeffs = items.iter().map(|x| x.as_i64()).collect::<Option<Vec<i64>>>()?;
                Some(self.from_coeffs(&coeffs))
            }
            serde_json::Value::Number(n) => self.parse_scalar(&n.to_string()),
            serde_json::Value::String(s) => self.parse_scalar(s),
            _ => None,
        }
    }

    fn elem_to_json(&self, e: &Vec<u64>) -> serde_json::Value {
        serde_json::Value::from(e.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_irreducibles() {
        assert_eq!(first_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(first_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(first_irreducible(5, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn irreducibility_matches_root_free_check_in_degree_two_and_three() {
        // Degree 2 and 3 polynomials are irreducible iff they have no root.
        for p in [2u64, 3, 5] {
            for d in [2usize, 3] {
                for t in 0..p.pow(d as u32) {
                    let mut f: Vec<u64> = (0..d).map(|i| t / p.pow(i as u32) % p).collect();
                    f.push(1);
                    let has_root = (0..p).any(|x| {
                        f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0
                    });
                    assert_eq!(is_irreducible(&f, p), !has_root, "p={p} f={f:?}");
                }
            }
        }
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (p, d) in [(2u64, 2usize), (2, 3), (3, 2), (5, 2)] {
            let f = GaloisField::new(p, d).unwrap();
            for t in 1..f.order() {
                let a = f.element_from_index(t);
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }
}
