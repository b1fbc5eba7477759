//! Zero-sum subsets of sizes `q` and `3q` among `4q − 2` points of ℤ_q².

use covsum::subsetsum::Strategy;
use covsum::zerosum::kemnitz_congruence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> covsum::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [2i64, 3, 4] {
        let mut held = 0;
        for _ in 0..50 {
            let pts: Vec<(i64, i64)> = (0..4 * q - 2).map(|_| (rng.gen_range(0..q), rng.gen_range(0..q))).collect();
            let rep = kemnitz_congruence(q as u64, &pts, Strategy::Optimized)?;
            if rep.holds {
                held += 1;
            } else {
                println!("counterexample for q = {q}: {pts:?} (N_q = {}, N_3q = {})", rep.n_q, rep.n_3q);
            }
        }
        println!("q = {q}: congruence held on {held}/50 random sequences");
    }
    Ok(())
}
