//! Permanents by Ryser's formula, and progressions of subset sums cut out by
//! linear constraints whose permanent over the covering columns is nonzero.

use covsum::arith::{PrimeField, Rationals, Ring};
use covsum::poly::{permanent, permanent_naive};
use covsum::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use covsum::subsetsum::{verify_cor23, Strategy};

fn main() -> covsum::Result<()> {
    let q = Rationals;
    let m: Vec<Vec<_>> = (0..5).map(|i| (0..5).map(|j| q.from_int((i as i64 + 1).pow(j) - j as i64)).collect()).collect();
    let per = permanent(&q, &m)?;
    assert_eq!(per, permanent_naive(&q, &m)?);
    println!("per = {per}");

    // 0(1) twice plus 0(2), 1(2): a 3-cover, w(0) = 3, J = {1, 2}.
    let zero = ResidueClass::new(0, 1)?;
    let tail = CoverSystem::from_pairs(&[(0, 1), (0, 2), (1, 2)])?;
    let sys = AugmentedSystem::new(zero, tail);
    let f = PrimeField::new(7)?;
    let matrix = vec![vec![1, 2, 3], vec![4, 0, 1]];
    let b = vec![5, 6];
    let x = vec![(0, 1), (2, 5), (0, 3)];
    let rep = verify_cor23(&f, &sys, &[1, 1, 1], &matrix, &b, &x, Strategy::Optimized)?;
    println!("permanent over J = {}, progression = {:?}", rep.permanent, rep.progression.as_ref().map(|p| &p.alpha));
    assert!(rep.progression.is_some());
    Ok(())
}
