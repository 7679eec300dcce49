//! Exact computer algebra for q-chromatic polynomials of graphs.
//!
//! Given a graph `G` on vertices `1..d` and positive integer vertex weights
//! `lambda`, the q-chromatic polynomial is the generating function
//!
//! ```text
//! chi_G^lambda(q, n) = sum over proper colorings c : V -> {1..n} of q^(sum_v lambda_v * c(v))
//! ```
//!
//! which, viewed through q-Ehrhart theory of order polytopes, is a polynomial
//! in the q-integer `x = [n]_q` with coefficients in the rational function
//! field `Q(q)`. This crate computes that polynomial exactly by five
//! independent routes (direct enumeration + interpolation, the flats/Möbius
//! formula, acyclic-orientation descent statistics, inclusion–exclusion, and
//! deletion–contraction), extracts its leading coefficient by several more,
//! computes G-partition generating functions, and scans all non-isomorphic
//! trees on `d` vertices for leading-coefficient collisions.
//!
//! Modules:
//! - [`qalgebra`]: exact arithmetic in `Z[q]`, `Q(q)` and `Q(q)[x]`,
//!   q-integers/factorials/binomials, Lagrange interpolation, power series.
//! - [`graphs`]: graphs, weights, acyclic orientations, posets, linear
//!   extensions with descent statistics, flats and their Möbius function,
//!   free-tree generation with AHU canonical forms.
//! - [`chromatic`]: the computation pipelines for `chi` and `chi-tilde`,
//!   beta expansions, reciprocity, stable evaluation, leading coefficients,
//!   order-polytope counts.
//! - [`gpartitions`]: G-partition counting and the rational generating
//!   function `P_G(q)`, with bridges to the leading coefficient and the
//!   stable principal evaluation.
//! - [`harness`]: run configuration, file I/O, the tree scanner, the
//!   cross-method verification suite, and the command-line interface.

pub mod chromatic;
pub mod config;
pub mod error;
pub mod gpartitions;
pub mod graphs;
pub mod harness;
pub mod qalgebra;

pub use config::RunConfig;
pub use error::{Error, Result};
