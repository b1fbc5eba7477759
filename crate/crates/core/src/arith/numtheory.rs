//! Integer helpers: gcd/lcm, primality, the Lucas-style binomial residue and
//! multiplicative orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// `lcm(a, b)`, or `None` on u64 overflow.
pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / a.gcd(&b)).checked_mul(b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n).into_iter().fold(n, |acc, q| acc / q * (q - 1))
}

/// If `q = p^h` with `p` prime and `h ≥ 1`, returns `(p, h)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut h = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        h += 1;
    }
    Some((p, h))
}

/// Exact binomial coefficient `C(n, k)` for `n ≥ 0`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k) mod p` for `0 ≤ k, n < p`, by a direct product.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `C(n, t) mod p` for any integer `n` and `t ≥ 0`, with the falling
/// factorial definition `n (n-1) … (n-t+1) / t!` for negative `n`.
pub fn generalized_binom_mod(n: &BigInt, t: u64, p: u64) -> u64 {
    // C(n, t) = (-1)^t C(t - n - 1, t) when n < 0.
    let (top, negate) = if n.is_negative() {
        (BigInt::from(t) - n - 1, t % 2 == 1)
    } else {
        (n.clone(), false)
    };
    let pb = BigInt::from(p);
    let mut nn = top;
    let mut tt = t;
    let mut acc = 1u64;
    while tt > 0 {
        let (q, r) = nn.div_rem(&pb);
        let nd = r.to_u64().expect("digit below p");
        let td = tt % p;
        acc = acc * small_binom_mod(nd, td, p) % p;
        if acc == 0 {
            return 0;
        }
        nn = q;
        tt /= p;
    }
    if negate {
        (p - acc) % p
    } else {
        acc
    }
}

/// `C(a-1, p^h - 1) mod p`, which equals 1 exactly when `p^h | a`.
pub fn binom_criterion(a: i64, p: u64, h: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if h == 0 {
        return Err(Error::invalid("h must be at least 1"));
    }
    let q = p
        .checked_pow(h)
        .ok_or_else(|| Error::invalid(format!("{p}^{h} overflows")))?;
    Ok(generalized_binom_mod(&(BigInt::from(a) - 1), q - 1, p))
}

/// Least `d ≥ 1` with `p^d ≡ 1 (mod n)`.
pub fn multiplicative_order(p: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::invalid("order modulus must be positive"));
    }
    if n == 1 {
        return Ok(1);
    }
    let base = p.rem_euclid(n as i64) as u64;
    if base.gcd(&n) != 1 {
        return Err(Error::OrderUndefined { base: p, modulus: n });
    }
    let mut x = base;
    let mut d = 1u64;
    while x != 1 {
        x = ((x as u128 * base as u128) % n as u128) as u64;
        d += 1;
    }
    Ok(d)
}
