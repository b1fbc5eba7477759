//! Nowhere-zero vectors: for a nonsingular matrix over GF(p^d) there is an
//! `x` with no zero entry and no zero entry in `Mx`.

use covsum::arith::{GaloisField, Ring};
use covsum::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use covsum::subsetsum::{nowhere_zero_pair, verify_cor24, Strategy};

fn main() -> covsum::Result<()> {
    let gf9 = GaloisField::new(3, 2)?;
    let e = |i: u64| gf9.element_from_index(i);
    let matrix = vec![vec![e(1), e(2), e(3)], vec![e(4), e(1), e(0)], vec![e(5), e(7), e(1)]];
    let c = e(3);
    assert!(!gf9.is_prime_subfield(&c));
    let pair = nowhere_zero_pair(&gf9, &matrix, &c, Strategy::Optimized)?;
    println!("digits {:?}\nx = {:?}\nMx = {:?}", pair.digits, pair.x, pair.y);

    // Subset sizes avoiding a constraint, over a 2-cover of ℤ.
    let f = GaloisField::new(5, 1)?;
    let sys = AugmentedSystem::new(ResidueClass::new(0, 2)?, CoverSystem::from_pairs(&[(1, 2), (0, 4), (2, 4), (1, 2)])?);
    let row = vec![vec![f.from_int(1), f.from_int(2), f.from_int(0), f.from_int(1)]];
    let rep = verify_cor24(&f, &sys, &[1, 3, 1, 1], &row, &[f.from_int(3)], Strategy::Optimized)?;
    println!("X = {:?}, S = {:?}", rep.x_set, rep.s_set);
    assert!(rep.holds);
    Ok(())
}
