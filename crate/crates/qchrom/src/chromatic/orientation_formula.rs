//! chi for unit weights from acyclic orientations and descent statistics,
//! and the expansion of chi in the q-binomial basis [n+j choose d]_q.

use num_bigint::BigInt;

use crate::chromatic::classical::chromatic_number;
use crate::chromatic::pairs::descent_data;
use crate::graphs::Graph;
use crate::qalgebra::{q_binomial, QPoly};

/// chi_G^1(q, n) = sum over pairs (rho, sigma) of
/// q^(binom(d+1, 2) - comaj sigma) * [n + des sigma choose d]_q.
pub fn chi_orientations_formula(graph: &Graph, n: u64) -> QPoly {
    let d = graph.vertex_count() as u64;
    let betas = beta_expansion(graph).betas;
    let mut acc = QPoly::zero();
    for (j, beta) in betas.iter().enumerate() {
        if !beta.is_zero() {
            acc = &acc + &(beta * &q_binomial(n + j as u64, d));
        }
    }
    acc
}

/// The expansion chi_G^1(q, n) = sum_j beta_j(q) [n+j choose d]_q obtained by
/// grouping the orientation formula by descent count.
#[derive(Clone, Debug)]
pub struct BetaExpansion {
    pub d: usize,
    /// The chromatic number xi; the top nonzero index is d - xi.
    pub xi: usize,
    /// beta_0 .. beta_(d-xi).
    pub betas: Vec<QPoly>,
}

pub fn beta_expansion(graph: &Graph) -> BetaExpansion {
    let d = graph.vertex_count();
    let binom_top = d * (d + 1) / 2;
    let data = descent_data(graph);
    let mut betas: Vec<QPoly> = Vec::new();
    for counts in &data.des_comaj {
        let mut coeffs = vec![BigInt::ZERO; binom_top + 1];
        for (comaj, &count) in counts.iter().enumerate() {
            if count > 0 {
                coeffs[binom_top - comaj] += BigInt::from(count);
            }
        }
        betas.push(QPoly::new(coeffs));
    }
    while betas.last().is_some_and(QPoly::is_zero) {
        betas.pop();
    }
    BetaExpansion {
        d,
        xi: chromatic_number(graph),
        betas,
    }
}
