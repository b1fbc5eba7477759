//! ℚ(ζ_N) modelled as ℚ[x]/(Φ_N(x)).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::numtheory::divisors;
use super::ring::{ElemCodec, Field, Ring};
use super::Rational;
use crate::error::{Error, Result};

/// Integer polynomial, coefficients from the constant term upwards.
pub type IntPoly = Vec<BigInt>;

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Exact quotient of integer polynomials where the divisor is monic.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let dn = den.len() - 1;
    debug_assert!(den[dn].is_one());
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

/// The N-th cyclotomic polynomial Φ_N, obtained by dividing `x^N - 1` by
/// every Φ_d with `d | N, d < N`.
pub fn cyclotomic_poly(n: u64) -> Result<Arc<IntPoly>> {
    if n == 0 {
        return Err(Error::invalid("cyclotomic level must be positive"));
    }
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Ok(hit.clone());
    }
    let len = usize::try_from(n).map_err(|_| Error::invalid("level too large"))? + 1;
    let mut poly = vec![BigInt::zero(); len];
    poly[0] = BigInt::from(-1);
    poly[len - 1] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            poly = div_exact_monic(&poly, &cyclotomic_poly(d)?);
        }
    }
    let poly = Arc::new(poly);
    cache().lock().unwrap().insert(n, poly.clone());
    Ok(poly)
}

/// Element of ℚ(ζ_N): a rational coefficient vector of length φ(N).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicElement {
    pub level: u64,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct CyclotomicField {
    level: u64,
    modulus: Arc<IntPoly>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level
    }
}

impl CyclotomicField {
    pub fn new(level: u64) -> Result<Self> {
        Ok(CyclotomicField { level, modulus: cyclotomic_poly(level)? })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// The class of `x`, a primitive N-th root of unity.
    pub fn generator(&self) -> CyclotomicElement {
        let mut raw = vec![Rational::zero(), Rational::one()];
        if raw.len() < self.degree() {
            raw.resize(self.degree(), Rational::zero());
        }
        self.reduce(raw)
    }

    pub fn scalar(&self, q: Rational) -> CyclotomicElement {
        let mut coeffs = vec![Rational::zero(); self.degree()];
        coeffs[0] = q;
        CyclotomicElement { level: self.level, coeffs }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<Rational>) -> CyclotomicElement {
        if coeffs.len() < self.degree() {
            coeffs.resize(self.degree(), Rational::zero());
        }
        self.reduce(coeffs)
    }

    /// Reduces an arbitrary-length coefficient vector modulo Φ_N.
    fn reduce(&self, mut raw: Vec<Rational>) -> CyclotomicElement {
        let deg = self.degree();
        for i in (deg..raw.len()).rev() {
            if raw[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut raw[i]);
            for (j, mj) in self.modulus[..deg].iter().enumerate() {
                if !mj.is_zero() {
                    let t = &c * &Rational::from_integer(mj.clone());
                    raw[i - deg + j] = &raw[i - deg + j] - &t;
                }
            }
        }
        raw.truncate(deg);
        CyclotomicElement { level: self.level, coeffs: raw }
    }
}

// Dense polynomials over ℚ used only for inversion.
fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] = &rem[i + j] - &(&c * bj);
        }
        quot[i] = c;
    }
    trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    trim(&mut out);
    out
}

impl Ring for CyclotomicField {
    type Elem = CyclotomicElement;

    fn zero(&self) -> CyclotomicElement {
        self.scalar(Rational::zero())
    }
    fn one(&self) -> CyclotomicElement {
        self.scalar(Rational::one())
    }
    fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicElement { level: self.level, coeffs }
    }
    fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CyclotomicElement { level: self.level, coeffs }
    }
    fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let deg = self.degree();
        let mut raw = vec![Rational::zero(); 2 * deg - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = &raw[i + j] + &(x * y);
                }
            }
        }
        self.reduce(raw)
    }
    fn neg(&self, a: &CyclotomicElement) -> CyclotomicElement {
        let coeffs = a.coeffs.iter().map(|x| -x).collect();
        CyclotomicElement { level: self.level, coeffs }
    }
    fn from_bigint(&self, n: &BigInt) -> CyclotomicElement {
        self.scalar(Rational::from_integer(n.clone()))
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &CyclotomicElement) -> bool {
        a.coeffs.iter().all(Rational::is_zero)
    }
}

impl Field for CyclotomicField {
    /// Extended Euclid against Φ_N.
    fn inv(&self, a: &CyclotomicElement) -> Option<CyclotomicElement> {
        if self.is_zero(a) {
            return None;
        }
        let m: Vec<Rational> = self.modulus.iter().cloned().map(Rational::from_integer).collect();
        let mut r0 = m;
        let mut r1 = a.coeffs.clone();
        trim(&mut r1);
        let mut s0: Vec<Rational> = vec![];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        // r0 is a nonzero constant because Φ_N is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let scaled: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Some(self.from_coeffs(scaled))
    }

    fn from_rational(&self, q: &Rational) -> Option<CyclotomicElement> {
        Some(self.scalar(q.clone()))
    }
}

impl ElemCodec for CyclotomicField {
    fn parse_scalar(&self, s: &str) -> Option<CyclotomicElement> {
        s.parse().ok().map(|q| self.scalar(q))
    }

    fn format_scalar(&self, e: &CyclotomicElement) -> Option<String> {
        if e.coeffs[1..].iter().all(Rational::is_zero) {
            Some(format!("{:?}", e.coeffs[0]))
        } else {
            None
        }
    }

    fn elem_from_json(&self, v: &serde_json::Value) -> Option<CyclotomicElement> {
        match v {
            serde_json::Value::Array(items) => {
                if items.len() > self.degree() {
                    return None;
                }
                let coeffs = items
                    .iter()
                    .map(|x| match x {
                        serde_json::Value::String(s) => s.parse().ok(),
                        serde_json::Value::Number(n) => n.to_string().parse().ok(),
                        _ => None,
                    })
                    .collect::<Option<Vec<Rational>>>()?;
                Some(self.from_coeffs(coeffs))
            }
            other => self.parse_scalar(other.as_str().map(str::to_string).unwrap_or(other.to_string()).trim()),
        }
    }

    fn elem_to_json(&self, e: &CyclotomicElement) -> serde_json::Value {
        serde_json::Value::Array(e.coeffs.iter().map(|c| serde_json::Value::String(c.to_string())).collect())
    }
}
