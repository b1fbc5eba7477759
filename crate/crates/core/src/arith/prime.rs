use num_bigint::BigInt;

use super::numtheory::is_prime;
use super::ring::{reduce_bigint, ElemCodec, Field, Ring};
use super::Rational;
use crate::error::{Error, Result};

/// The prime field ℤ_p. Elements are residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::invalid(format!("prime {p} exceeds the 32-bit modulus limit")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        reduce_bigint(n, self.p)
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce(n)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
}

impl ElemCodec for PrimeField {
    fn parse_scalar(&self, s: &str) -> Option<u64> {
        let q: Rational = s.parse().ok()?;
        self.from_rational(&q)
    }
    fn format_scalar(&self, e: &u64) -> Option<String> {
        Some(e.to_string())
    }
    fn elem_to_json(&self, e: &u64) -> serde_json::Value {
        serde_json::Value::from(*e)
    }
}

/// The ring ℤ of integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::from(0)
    }
    fn one(&self) -> BigInt {
        BigInt::from(1)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

impl ElemCodec for Integers {
    fn parse_scalar(&self, s: &str) -> Option<BigInt> {
        s.parse().ok()
    }
    fn format_scalar(&self, e: &BigInt) -> Option<String> {
        Some(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverses_and_rationals() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_rational(&Rational::new(1, 2)), Some(4));
        assert_eq!(f.from_rational(&Rational::new(1, 7)), None);
        assert_eq!(f.from_int(-1), 6);
        assert_eq!(f.parse_scalar("-3/2"), Some(2));
    }
}
