//! Exact arithmetic in ℚ(ζ_N) and GF(p^d), and roots of unity in either.

use covsum::arith::roots::has_exact_order;
use covsum::arith::{cyclotomic_poly, root_of_unity, CyclotomicField, FieldSpec, GaloisField, Rational, Ring, RootOfUnity};

fn main() -> covsum::Result<()> {
    println!("Φ_12 coefficients: {:?}", cyclotomic_poly(12)?);

    let q12 = CyclotomicField::new(12)?;
    let z = q12.generator();
    assert!(has_exact_order(&q12, &z, 12));
    // ζ^4 + ζ^8 = −1 for a primitive 12th root.
    let s = q12.add(&q12.pow(&z, 4), &q12.pow(&z, 8));
    assert_eq!(s, q12.scalar(Rational::from(-1)));
    println!("ζ^4 + ζ^8 = {s:?}");

    let gf9 = GaloisField::new(3, 2)?;
    let g = gf9.element_from_index(4);
    println!("GF(9) element {g:?} has square {:?}", gf9.mul(&g, &g));

    // The smallest extension of ℤ_7 holding an 8th root of unity.
    match root_of_unity(FieldSpec::Prime { p: 7 }, 8)? {
        RootOfUnity::Galois { field, zeta } => {
            println!("order-8 root in GF(7^{}): {zeta:?}", field.degree());
            assert!(has_exact_order(&field, &zeta, 8));
        }
        RootOfUnity::Cyclotomic { .. } => unreachable!("positive characteristic"),
    }
    Ok(())
}
