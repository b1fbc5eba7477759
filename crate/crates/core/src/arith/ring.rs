use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::Rational;

/// A commutative-or-not ring with identity, described by a runtime object.
///
/// Elements do not know which ring they live in; every operation goes
/// through the descriptor. This lets moduli (`p`, `N`, defining polynomials)
/// be chosen at runtime without threading const generics everywhere.
// `from_*` take `&self`: the descriptor decides where the integer lands.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// Image of an integer under the unique ring map from ℤ.
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;

    /// Characteristic of the ring; 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, base: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut sq = base.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

#[allow(clippy::wrong_self_convention)]
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of a rational number; `None` when the denominator vanishes
    /// in the field.
    fn from_rational(&self, q: &Rational) -> Option<Self::Elem> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        self.inv(&den).map(|d| self.mul(&num, &d))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// Text and JSON encodings for ring elements.
pub trait ElemCodec: Ring {
    /// Parses a scalar written as an integer or `num/den` fraction.
    fn parse_scalar(&self, s: &str) -> Option<Self::Elem>;

    /// Renders an element for the polynomial text format, or `None` if the
    /// element has no scalar spelling.
    fn format_scalar(&self, e: &Self::Elem) -> Option<String>;

    fn elem_from_json(&self, v: &serde_json::Value) -> Option<Self::Elem> {
        match v {
            serde_json::Value::Number(n) => self.parse_scalar(&n.to_string()),
            serde_json::Value::String(s) => self.parse_scalar(s.trim()),
            _ => None,
        }
    }

    fn elem_to_json(&self, e: &Self::Elem) -> serde_json::Value {
        serde_json::Value::String(self.format_scalar(e).unwrap_or_else(|| format!("{e:?}")))
    }
}

/// Reduces a big integer into `[0, p)`.
pub(crate) fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = n % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().expect("residue fits in u64")
}
