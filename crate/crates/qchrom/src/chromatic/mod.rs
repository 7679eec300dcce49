//! The computation pipelines for chi_G^lambda(q, n) and chi-tilde(q, x):
//! brute-force enumeration, interpolation, the flats/Möbius formula, the
//! acyclic-orientation descent formula, Loebl inclusion-exclusion, and
//! deletion-contraction, plus beta expansions, reciprocity, the stable
//! evaluation, leading-coefficient routes, and order-polytope counts.
//!
//! Everything here is a pure function over immutable inputs.

pub mod classical;
mod delcon;
mod enumerate;
mod flats_formula;
mod leading;
mod loebl;
mod orderpoly;
mod orientation_formula;
mod pairs;
mod reciprocity;
mod stable;
mod tilde;
mod weights;

pub use delcon::chi_delcon;
pub use enumerate::chi_enumerate;
pub use flats_formula::chi_tilde_mobius;
pub use leading::{
    leading_coeff, leading_coeff_delcon, leading_coeff_orientations, leading_coeff_tree,
    normalized_fingerprint,
};
pub use loebl::chi_loebl;
pub use orderpoly::{kim_stanton_ehr, order_polytope_ehr};
pub use orientation_formula::{beta_expansion, chi_orientations_formula, BetaExpansion};
pub use pairs::{descent_data, DescentData};
pub use reciprocity::{reciprocity_lhs, reciprocity_lhs_from_tilde, reciprocity_rhs};
pub use stable::stable_evaluation;
pub use tilde::{chi_tilde, QChromPoly};
pub use weights::reduce_to_unit_weights;
