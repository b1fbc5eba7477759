use crate::arith::Ring;
use crate::error::{Error, Result};
use crate::subsets::GrayCode;

pub const PERMANENT_CAP: usize = 20;

fn check_square<E>(m: &[Vec<E>]) -> Result<()> {
    if let Some(row) = m.iter().position(|r| r.len() != m.len()) {
        return Err(Error::invalid(format!(
            "matrix is not square: row {} has {} entries, expected {}",
            row + 1,
            m[row].len(),
            m.len()
        )));
    }
    Ok(())
}

/// Ryser's formula, walking column subsets in Gray-code order so each step
/// updates the row sums by one column.
pub fn permanent<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem> {
    check_square(m)?;
    let n = m.len();
    if n > PERMANENT_CAP {
        return Err(Error::Cap { what: "permanent size", cap: PERMANENT_CAP as u64, got: n as u64 });
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let mut row_sums = vec![ring.zero(); n];
    let mut total = ring.zero();
    for step in GrayCode::new(n).skip(1) {
        let (col, on) = step.flip.expect("every step after the first flips a bit");
        for (i, s) in row_sums.iter_mut().enumerate() {
            *s = if on { ring.add(s, &m[i][col]) } else { ring.sub(s, &m[i][col]) };
        }
        let prod = row_sums.iter().fold(ring.one(), |acc, s| ring.mul(&acc, s));
        // sign (−1)^{n−|S|}
        total = if (n - step.mask.count_ones() as usize).is_multiple_of(2) {
            ring.add(&total, &prod)
        } else {
            ring.sub(&total, &prod)
        };
    }
    Ok(total)
}

/// Sum over all permutations; only for small matrices.
pub fn permanent_naive<R: Ring>(ring: &R, m: &[Vec<R::Elem>]) -> Result<R::Elem> {
    check_square(m)?;
    if m.len() > 10 {
        return Err(Error::Cap { what: "naive permanent size", cap: 10, got: m.len() as u64 });
    }
    fn go<R: Ring>(ring: &R, m: &[Vec<R::Elem>], row: usize, used: &mut [bool], acc: R::Elem) -> R::Elem {
        if row == m.len() {
            return acc;
        }
        let mut total = ring.zero();
        for col in 0..m.len() {
            if !used[col] {
                used[col] = true;
                let next = ring.mul(&acc, &m[row][col]);
                total = ring.add(&total, &go(ring, m, row + 1, used, next));
                used[col] = false;
            }
        }
        total
    }
    Ok(go(ring, m, 0, &mut vec![false; m.len()], ring.one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Integers;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn examples() {
        let z = Integers;
        assert_eq!(permanent(&z, &int_matrix(&[&[1, 0], &[0, 1]])).unwrap(), BigInt::from(1));
        assert_eq!(permanent(&z, &int_matrix(&[&[1, 2], &[3, 4]])).unwrap(), BigInt::from(10));
        let ones = vec![vec![BigInt::from(1); 4]; 4];
        assert_eq!(permanent(&z, &ones).unwrap(), BigInt::from(24));
        assert_eq!(permanent(&z, &[]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn errors() {
        let z = Integers;
        assert!(permanent(&z, &int_matrix(&[&[1, 2]])).is_err());
        let big = vec![vec![BigInt::from(0); 21]; 21];
        assert!(matches!(permanent(&z, &big), Err(Error::Cap { .. })));
    }
}
