//! Sparse multivariate polynomials and the subset-evaluation toolkit built
//! on them.

mod blackbox;
pub mod formula;
pub mod linalg;
mod multipoly;
pub mod permanent;
pub mod text;

pub use blackbox::BlackBoxPoly;
pub use formula::{
    chi_basis_independence, cn_witness, coeff_by_subsets, escott_sum, mobius_transform, split_variables, zeta_transform,
    PolyOracle,
};
pub use linalg::rank;
pub use multipoly::{support_mask, Exponent, MultiPoly};
pub use permanent::{permanent, permanent_naive};
pub use text::{format_poly, parse_poly};
