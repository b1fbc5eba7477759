use crate::arith::Field;

/// Rank by Gaussian elimination.
pub fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.inv(&rows[r][col]).expect("pivot is nonzero");
        let pivot_row: Vec<F::Elem> = rows[r].iter().map(|x| field.mul(x, &inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    #[test]
    fn small_ranks() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 3]]), 2);
        assert_eq!(rank(&f, vec![vec![0, 0, 0]]), 0);
        assert_eq!(rank(&f, vec![]), 0);
    }
}
