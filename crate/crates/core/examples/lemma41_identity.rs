//! The character-sum identity tying `ψ(θ)` to the coefficients `c(I_z)`,
//! checked exactly in ℚ(ζ_N).

use covsum::arith::{root_of_unity, FieldSpec, RootOfUnity};
use covsum::poly::parse_poly;
use covsum::residue::CoverSystem;
use covsum::subsetsum::{verify_lemma41, Strategy};

fn main() -> covsum::Result<()> {
    let sys = CoverSystem::from_pairs(&[(0, 2), (1, 2), (0, 3), (1, 3), (2, 3)])?;
    let RootOfUnity::Cyclotomic { field, zeta } = root_of_unity(FieldSpec::Rational, sys.period())? else {
        unreachable!("characteristic zero")
    };
    let f = parse_poly(&field, 5, "x1*x3 - 2*x2 + 1/3")?;
    let rep = verify_lemma41(&sys, &[1, 1, 1, 2, 1], &f, &zeta, Strategy::Optimized)?;
    println!("N = {}, m = {}, nonzero ψ at {:?}", rep.modulus, rep.multiplicity, rep.nonzero_psi);
    assert!(rep.identity_holds && rep.equivalence_holds);
    Ok(())
}
