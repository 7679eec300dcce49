//! Loebl's inclusion–exclusion formula for unit weights.
//!
//! chi-hat(q, n) = sum over A subset of E of (-1)^|A| prod over components W
//! of (V, A) of [n]_(q^|W|). This counts colors 0-based; the 1-based
//! enumeration used everywhere else satisfies chi_enumerate = q^d * chi_loebl.

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::qalgebra::{q_int_pow, QPoly};

pub fn chi_loebl(graph: &Graph, n: u64, config: &RunConfig) -> Result<QPoly> {
    let m = graph.edge_count();
    if m >= 63 || (1u64 << m) > config.max_edge_subsets {
        return Err(Error::BudgetExceeded(format!(
            "2^{m} edge subsets exceed max_edge_subsets = {}",
            config.max_edge_subsets
        )));
    }
    let edges = graph.edges();
    let mut acc = QPoly::zero();
    let mut subset = Vec::with_capacity(m);
    for mask in 0u64..(1 << m) {
        subset.clear();
        subset.extend(
            edges
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        );
        let mut term = QPoly::one();
        for block in graph.components(&subset) {
            term = &term * &q_int_pow(n, block.len() as u64);
            if term.is_zero() {
                break;
            }
        }
        if mask.count_ones() % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_enumerate;
    use crate::graphs::WeightVector;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn p2_two_colors() {
        // (1+q)^2 - (1+q^2) = 2q, and q^d * 2q = 2q^3 = chi_enumerate
        let g = Graph::path(2);
        let got = chi_loebl(&g, 2, &cfg()).unwrap();
        assert_eq!(got, QPoly::from_i64s(&[0, 2]));
        let shifted = got.shift_up(2);
        assert_eq!(
            shifted,
            chi_enumerate(&g, &WeightVector::unit(2), 2, &cfg()).unwrap()
        );
    }

    #[test]
    fn star4_two_colors() {
        // q^7 + q^5 after the q^d prefactor
        let g = Graph::star(4);
        let got = chi_loebl(&g, 2, &cfg()).unwrap().shift_up(4);
        assert_eq!(got, QPoly::from_i64s(&[0, 0, 0, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn zero_colors_vanish() {
        assert!(chi_loebl(&Graph::complete(4), 0, &cfg()).unwrap().is_zero());
    }
}
