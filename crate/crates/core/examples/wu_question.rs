//! For a prime `p` and nonzero `c_1, …, c_{p−1}` in ℤ_p, every target is a
//! subset sum. Checked exhaustively for small `p`.

use covsum::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use covsum::subsetsum::{verify_cor22, Strategy};

fn main() -> covsum::Result<()> {
    for p in [2u64, 3, 5] {
        let one = ResidueClass::new(0, 1)?;
        let sys = AugmentedSystem::new(one, CoverSystem::new(vec![one; p as usize - 1])?);
        let k = p as u32 - 1;
        let mut tuples = 0;
        for code in 0..(p - 1).pow(k) {
            let coeffs: Vec<u64> = (0..k).map(|i| code / (p - 1).pow(i) % (p - 1) + 1).collect();
            for c in 0..p {
                let rep = verify_cor22(&sys, &vec![1; k as usize], p, &coeffs, c, Strategy::Optimized)?;
                assert!(rep.progression.is_some(), "no subset of {coeffs:?} sums to {c}");
            }
            tuples += 1;
        }
        println!("p = {p}: all {tuples} tuples reach every residue");
    }
    Ok(())
}
