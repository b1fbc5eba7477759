//! `c*x1^e1*...*xk^ek` text format.

use crate::arith::ElemCodec;
use crate::error::{Error, Result};

use super::MultiPoly;

/// Prints terms from the largest exponent vector down; `0` for the zero
/// polynomial.
pub fn format_poly<R: ElemCodec>(f: &MultiPoly<R>) -> Result<String> {
    let ring = f.ring();
    let terms: Vec<_> = f.terms().collect();
    if terms.is_empty() {
        return Ok("0".into());
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.into_iter().rev().enumerate() {
        let mut monomial = Vec::new();
        for (v, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => monomial.push(format!("x{}", v + 1)),
                _ => monomial.push(format!("x{}^{k}", v + 1)),
            }
        }
        let mut coeff = ring
            .format_scalar(c)
            .ok_or_else(|| Error::invalid(format!("coefficient {c:?} has no scalar spelling")))?;
        let negative = coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        let sign = match (i, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        out.push_str(sign);
        let body = if monomial.is_empty() {
            coeff
        } else if coeff == "1" {
            monomial.join("*")
        } else {
            format!("{coeff}*{}", monomial.join("*"))
        };
        out.push_str(&body);
    }
    Ok(out)
}

/// Parses the text format. Variables are `x1 … xk`; coefficients are
/// integers or `num/den` fractions; repeated monomials are merged.
pub fn parse_poly<R: ElemCodec>(ring: &R, nvars: usize, text: &str) -> Result<MultiPoly<R>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut poly = MultiPoly::zero(ring.clone(), nvars);
    let mut pieces = Vec::new();
    let mut start = 0;
    let bytes = compact.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > start {
            pieces.push(&compact[start..i]);
            start = i;
        }
    }
    pieces.push(&compact[start..]);

    for piece in pieces {
        let (negative, body) = match piece.as_bytes().first() {
            Some(b'-') => (true, &piece[1..]),
            Some(b'+') => (false, &piece[1..]),
            _ => (false, piece),
        };
        if body.is_empty() {
            return Err(Error::parse(format!("empty term in {text:?}")));
        }
        let mut coeff = ring.one();
        let mut e = vec![0u32; nvars];
        for factor in body.split('*') {
            if let Some(var) = factor.strip_prefix('x') {
                let (idx, pow) = match var.split_once('^') {
                    Some((i, p)) => (i, p.parse::<u32>().map_err(|_| Error::parse(format!("bad exponent in {factor:?}")))?),
                    None => (var, 1),
                };
                let idx: usize = idx.parse().map_err(|_| Error::parse(format!("bad variable {factor:?}")))?;
                if idx == 0 || idx > nvars {
                    return Err(Error::parse(format!("variable x{idx} outside x1..x{nvars}")));
                }
                e[idx - 1] += pow;
            } else {
                let c = ring
                    .parse_scalar(factor)
                    .ok_or_else(|| Error::parse(format!("bad coefficient {factor:?}")))?;
                coeff = ring.mul(&coeff, &c);
            }
        }
        if negative {
            coeff = ring.neg(&coeff);
        }
        poly.add_term(e, coeff);
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rational, Rationals};

    #[test]
    fn parse_and_print() {
        let r = Rationals;
        let f = parse_poly(&r, 3, "x1*x2 + 2*x1 - 3/4*x3^2 - 1").unwrap();
        assert_eq!(f.coeff(&[1, 1, 0]).unwrap(), Rational::from(1));
        assert_eq!(f.coeff(&[0, 0, 2]).unwrap(), Rational::new(-3, 4));
        assert_eq!(f.coeff(&[0, 0, 0]).unwrap(), Rational::from(-1));
        let text = format_poly(&f).unwrap();
        assert_eq!(parse_poly(&r, 3, &text).unwrap(), f);
    }

    #[test]
    fn rejects_malformed() {
        let r = Rationals;
        for bad in ["", "x4", "x0", "2*", "x1^", "x1 + - x2", "y1"] {
            assert!(parse_poly(&r, 3, bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn zero_and_prime_field() {
        let f5 = PrimeField::new(5).unwrap();
        let f = parse_poly(&f5, 2, "x1 + 4*x1").unwrap();
        assert!(f.is_zero());
        assert_eq!(format_poly(&f).unwrap(), "0");
        let g = parse_poly(&f5, 2, "-x2").unwrap();
        assert_eq!(g.coeff(&[0, 1]).unwrap(), 4);
    }
}
