//! Exact arithmetic: rationals, prime fields, cyclotomic fields, finite
//! extension fields and a few number-theoretic kernels.

pub mod cyclotomic;
pub mod galois;
pub mod numtheory;
pub mod prime;
pub mod rational;
pub mod ring;
pub mod roots;

pub use cyclotomic::{cyclotomic_poly, CyclotomicElement, CyclotomicField};
pub use galois::GaloisField;
pub use numtheory::{binom_criterion, multiplicative_order};
pub use prime::{Integers, PrimeField};
pub use rational::{frac_part, Rational, Rationals};
pub use ring::{ElemCodec, Field, Ring};
pub use roots::{root_of_unity, FieldSpec, RootOfUnity};
