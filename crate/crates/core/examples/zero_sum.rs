//! Signed zero-sum subset counts against exact-partition products, mod p.

use covsum::subsetsum::Strategy;
use covsum::zerosum::{cor33_ii_check, verify_thm32, ZeroSumInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> covsum::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    // ℤ_3 ⊕ ℤ_9 with k at the threshold 2 + 8 = 10, then above it.
    for k in [10, 12] {
        let inst = ZeroSumInstance::random(&mut rng, 3, &[1, 2], k);
        let rep = verify_thm32(&inst, Strategy::Optimized)?;
        println!("k = {k}: lhs {} rhs {} (above threshold: {})", rep.lhs, rep.rhs, rep.olson);
        assert!(rep.holds);
    }

    let rep = cor33_ii_check(2, 2, &[1, 5, 2, 7, 3, 3], 1, Strategy::Optimized)?;
    println!("size-3 subsets ≡ 1 mod 4: {} ; coefficient {} ; agree mod 2: {}", rep.count, rep.coefficient, rep.holds);
    Ok(())
}
