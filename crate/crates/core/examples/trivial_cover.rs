//! Subset sums reaching every `r/N_A`, and the counting bound for
//! unit-fraction subset sums.

use covsum::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use covsum::subsetsum::{count_unit_fraction_subsets, trivial_cover_residues, verify_cor25, Strategy};

fn main() -> covsum::Result<()> {
    // {r(7)}: subset sums of m_1..m_6 meet every class mod 7.
    let rep = trivial_cover_residues(7, &[1, 3, 2, 6, 4, 5], Strategy::Optimized)?;
    assert!(rep.holds);
    println!("trivial cover mod 7: all {} residues reached", rep.found.len());

    // Erdős's cover reordered so the modulus-12 class comes last.
    let erdos = CoverSystem::from_pairs(&[(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])?;
    let rep = verify_cor25(&erdos, &[1, 1, 1, 1], &[], Strategy::Optimized)?;
    println!("K = {:?}; every r/12 reached: {}", rep.k_set, rep.holds);

    let sys = AugmentedSystem::new(ResidueClass::new(0, 1)?, CoverSystem::from_pairs(&[(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])?);
    let rep = count_unit_fraction_subsets(&sys, None, Strategy::Optimized)?;
    for row in &rep.rows {
        println!("a = {}: {} subsets ≥ {}", row.a, row.count, row.bound);
    }
    assert!(rep.holds);
    Ok(())
}
