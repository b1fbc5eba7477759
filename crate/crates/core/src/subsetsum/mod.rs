//! Fractional parts of subset sums `Σ_{s∈I} m_s/n_s` over systems of
//! residue classes, and the progression statements they satisfy.
//!
//! Every verifier takes a [`Strategy`]: `Optimized` walks subsets in Gray
//! code order with integer running sums over a common denominator, `Naive`
//! recomputes each subset with big rationals. Reports from the two must be
//! identical.

mod assignments;
mod checks;
pub mod corollaries;
pub mod kernel;
pub mod lemma41;
pub mod progression;
pub mod s10;
pub mod theorem21;

pub use corollaries::{
    nowhere_zero_pair, trivial_cover_residues, verify_cor21, verify_cor22, verify_cor23, verify_cor24, verify_cor25,
    AlphaZeroCheck, Cor21Report, Cor23Report, Cor24Report, Cor25Report, NowhereZero, ProgressionReport,
};
pub use kernel::{fractional_spectrum, Strategy, SubsetRecord, Weights};
pub use lemma41::{psi, verify_lemma41, Lemma41Report};
pub use progression::{find_progression, ProgressionWitness};
pub use s10::{count_unit_fraction_subsets, S10Report, S10Row};
pub use theorem21::{eq21_coefficient, verify_theorem21, Theorem21Instance, Theorem21Report};

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
