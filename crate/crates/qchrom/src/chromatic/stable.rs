//! The stable principal evaluation chi-tilde(q, 1/(1-q)): the generating
//! function over all proper colorings c : V -> Z_(>0), weighted by
//! q^(sum lambda_v c(v)). For unit weights this is X_G(q, q^2, q^3, ...).

use crate::chromatic::flats_formula::chi_tilde_mobius;
use crate::config::RunConfig;
use crate::error::Result;
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{QPoly, QRat};

pub fn stable_evaluation(graph: &Graph, lambda: &WeightVector, config: &RunConfig) -> Result<QRat> {
    let tilde = chi_tilde_mobius(graph, lambda, config)?;
    let x0 = QRat::new(QPoly::one(), QPoly::from_i64s(&[1, -1]))?;
    Ok(tilde.substitute_x(&x0))
}
