//! Reading a squarefree coefficient off the values on 0/1 points, and the
//! nonvanishing point it guarantees on a two-element grid.

use covsum::arith::{PrimeField, Rationals, Ring};
use covsum::poly::{cn_witness, coeff_by_subsets, escott_sum, parse_poly, split_variables};

fn main() -> covsum::Result<()> {
    let q = Rationals;
    let f = parse_poly(&q, 3, "2*x1*x2 - x2*x3 + 5*x1 + 1/2")?;
    // [x1 x2] f = Σ_{I ⊆ {1,2}} (−1)^{2−|I|} f(𝟙_I)
    let c = coeff_by_subsets(&f, &[0, 1])?;
    println!("[x1 x2] f = {c}");
    assert_eq!(c, f.coeff(&[1, 1, 0])?);

    // Two-element sets X_s; the product over J = {1, 2} has a nonzero coefficient.
    let sets = vec![vec![q.from_int(0), q.from_int(3)], vec![q.from_int(1), q.from_int(2)], vec![q.from_int(4)]];
    let point = cn_witness(&f, &sets, &[0, 1])?.expect("a nonvanishing point exists");
    println!("f{point:?} = {}", f.eval(&point));

    // Alternating sums of n-th powers of subset sums vanish below k.
    let z7 = PrimeField::new(7)?;
    let c: Vec<u64> = vec![3, 1, 4, 1, 5];
    for n in 0..5 {
        assert_eq!(escott_sum(&z7, &c, n)?, 0);
    }
    println!("escott sums vanish for n < 5 over ℤ_7");

    // Splitting x1 into two variables doubles the top coefficient.
    let g = parse_poly(&q, 2, "x1^2*x2")?;
    let h = split_variables(&g, &[2, 1])?;
    println!("split: {}", covsum::poly::format_poly(&h)?);
    Ok(())
}
