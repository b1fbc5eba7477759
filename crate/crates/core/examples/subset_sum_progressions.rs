//! Fractional parts of `Σ_{s∈I} m_s/n_s` and the arithmetic progressions
//! forced by a covering with a distinguished class.

use covsum::arith::{FieldSpec, PrimeField, Rationals, Ring};
use covsum::cli::generate::t21_instance;
use covsum::cli::{check_instance, Theorem};
use covsum::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use covsum::subsetsum::{fractional_spectrum, verify_cor21, Strategy};

fn main() -> covsum::Result<()> {
    let cover = CoverSystem::from_pairs(&[(0, 2), (1, 4), (3, 4)])?;
    let spectrum = fractional_spectrum(&cover, &[1, 1, 3], |_| true, Strategy::Optimized)?;
    for (frac, subsets) in &spectrum {
        println!("{{Σ}} = {frac}: {} subsets", subsets.len());
    }

    // A 2-cover with 0(2) distinguished; X_s = {0, 1} over ℤ_5.
    let a0 = ResidueClass::new(0, 2)?;
    let tail = CoverSystem::from_pairs(&[(1, 2), (0, 4), (2, 4), (1, 2)])?;
    let sys = AugmentedSystem::new(a0, tail);
    let f = PrimeField::new(5)?;
    let x = vec![(f.zero(), f.one()); 4];
    let rep = verify_cor21(&f, &sys, &[1, 1, 3, 1], &x, false, Strategy::Optimized)?;
    println!("α = {}, sizes {:?} ≥ {}", rep.alpha, rep.sizes, rep.bound);
    assert!(rep.holds);

    let q = Rationals;
    let xq = vec![(q.zero(), q.one()); 4];
    assert_eq!(rep.sizes.len(), verify_cor21(&q, &sys, &[1, 1, 3, 1], &xq, false, Strategy::Naive)?.sizes.len());

    // A random instance with a polynomial constraint, as the CLI sees it.
    let inst = serde_json::to_value(t21_instance(4, FieldSpec::Prime { p: 7 })?).expect("serializes");
    let checked = check_instance(Theorem::T21, &inst, Strategy::Optimized)?;
    println!("random instance: P = {}, holds = {}", inst["P"], checked.holds);
    assert!(checked.holds);
    Ok(())
}
