//! Reduction of a weighted graph to a signed combination of unit-weight
//! graphs via the expansion/addition identity
//! chi_G^lambda = chi_exp(G,v) - chi_add(G,v).

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};

/// Repeatedly splits weighted vertices until all weights are 1, returning the
/// signed multiset of unit-weight graphs on Lambda_V vertices. The expansion
/// doubles the term count per unit of excess weight, so Lambda_V is
/// budget-bounded.
pub fn reduce_to_unit_weights(
    graph: &Graph,
    lambda: &WeightVector,
    config: &RunConfig,
) -> Result<Vec<(i8, Graph)>> {
    let total = lambda.total();
    if total > config.max_reduction_weight {
        return Err(Error::BudgetExceeded(format!(
            "Lambda_V = {total} exceeds max_reduction_weight = {}",
            config.max_reduction_weight
        )));
    }
    let mut out = Vec::new();
    split(graph.clone(), lambda.clone(), 1, &mut out)?;
    Ok(out)
}

fn split(graph: Graph, lambda: WeightVector, sign: i8, out: &mut Vec<(i8, Graph)>) -> Result<()> {
    match (0..graph.vertex_count()).find(|&v| lambda.get(v) >= 2) {
        None => {
            out.push((sign, graph));
            Ok(())
        }
        Some(v) => {
            let (exp, w) = graph.expand_vertex(v, &lambda)?;
            let (add, w2) = graph.add_vertex_edge(v, &lambda)?;
            split(exp, w, sign, out)?;
            split(add, w2, -sign, out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_enumerate;
    use crate::qalgebra::QPoly;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn unit_weights_pass_through() {
        let g = Graph::path(3);
        let got = reduce_to_unit_weights(&g, &WeightVector::unit(3), &cfg()).unwrap();
        assert_eq!(got, vec![(1, g)]);
    }

    #[test]
    fn single_vertex_of_weight_two() {
        let g = Graph::edgeless(1);
        let lam = WeightVector::new(vec![2]).unwrap();
        let got = reduce_to_unit_weights(&g, &lam, &cfg()).unwrap();
        assert_eq!(got, vec![(1, Graph::edgeless(2)), (-1, Graph::path(2))]);
        // identity check at n = 2: q^2 [2]_(q^2) = (q + q^2)^2 - 2q^3
        let direct = chi_enumerate(&g, &lam, 2, &cfg()).unwrap();
        let mut acc = QPoly::zero();
        for (sign, h) in &got {
            let term = chi_enumerate(h, &WeightVector::unit(2), 2, &cfg()).unwrap();
            acc = if *sign > 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        assert_eq!(direct, QPoly::from_i64s(&[0, 0, 1, 0, 1]));
        assert_eq!(acc, direct);
    }

    #[test]
    fn weighted_p2_identity() {
        let g = Graph::path(2);
        let lam = WeightVector::new(vec![2, 1]).unwrap();
        let got = reduce_to_unit_weights(&g, &lam, &cfg()).unwrap();
        assert_eq!(got.len(), 2);
        for (_, h) in &got {
            assert_eq!(h.vertex_count(), 3);
        }
        for n in 2..=3 {
            let direct = chi_enumerate(&g, &lam, n, &cfg()).unwrap();
            let mut acc = QPoly::zero();
            for (sign, h) in &got {
                let term = chi_enumerate(h, &WeightVector::unit(3), n, &cfg()).unwrap();
                acc = if *sign > 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            assert_eq!(acc, direct);
        }
    }

    #[test]
    fn expansion_minus_addition_identity_at_n3() {
        // chi_G^lambda = chi_exp - chi_add for one split step
        let g = Graph::path(3);
        let lam = WeightVector::new(vec![2, 1, 1]).unwrap();
        let (exp, w_exp) = g.expand_vertex(0, &lam).unwrap();
        let (add, w_add) = g.add_vertex_edge(0, &lam).unwrap();
        let direct = chi_enumerate(&g, &lam, 3, &cfg()).unwrap();
        let lhs = &chi_enumerate(&exp, &w_exp, 3, &cfg()).unwrap()
            - &chi_enumerate(&add, &w_add, 3, &cfg()).unwrap();
        assert_eq!(lhs, direct);
    }

    #[test]
    fn budget_is_enforced() {
        let mut config = cfg();
        config.max_reduction_weight = 3;
        let lam = WeightVector::new(vec![2, 2]).unwrap();
        assert!(matches!(
            reduce_to_unit_weights(&Graph::path(2), &lam, &config),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
