//! The brute-force oracle: direct summation over proper colorings.

use num_bigint::BigInt;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::QPoly;

/// chi_G^lambda(q, n): the exact sum of q^(sum_v lambda_v c(v)) over all
/// proper colorings c : V -> {1..n}, by depth-first enumeration with
/// conflict pruning. This is the independent oracle every other pipeline is
/// checked against.
pub fn chi_enumerate(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    config: &RunConfig,
) -> Result<QPoly> {
    let d = graph.vertex_count();
    assert_eq!(lambda.len(), d, "weight vector length mismatch");
    check_oracle_budget(d, n, config)?;
    if n == 0 {
        return Ok(QPoly::zero());
    }
    // neighbors among already-colored (lower-index) vertices
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(a, b) in graph.edges() {
        earlier[b].push(a);
    }
    let top = lambda.total() * n;
    let mut counts = vec![0u128; top as usize + 1];
    let mut colors = vec![0u64; d];

    fn walk(
        v: usize,
        exponent: u64,
        n: u64,
        earlier: &[Vec<usize>],
        lambda: &WeightVector,
        colors: &mut [u64],
        counts: &mut [u128],
    ) {
        if v == earlier.len() {
            counts[exponent as usize] += 1;
            return;
        }
        'colors: for c in 1..=n {
            for &u in &earlier[v] {
                if colors[u] == c {
                    continue 'colors;
                }
            }
            colors[v] = c;
            walk(
                v + 1,
                exponent + lambda.get(v) * c,
                n,
                earlier,
                lambda,
                colors,
                counts,
            );
        }
        colors[v] = 0;
    }
    walk(0, 0, n, &earlier, lambda, &mut colors, &mut counts);

    Ok(QPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// Enforces the n^d work bound for one enumeration.
pub fn check_oracle_budget(d: usize, n: u64, config: &RunConfig) -> Result<()> {
    if d > config.max_d {
        return Err(Error::BudgetExceeded(format!(
            "oracle too large: d = {d} exceeds max_d = {}",
            config.max_d
        )));
    }
    let work = (n.max(1) as u128).pow(d as u32);
    if work > config.max_oracle_work {
        return Err(Error::BudgetExceeded(format!(
            "oracle too large: n^d = {n}^{d} exceeds max_oracle_work = {}",
            config.max_oracle_work
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn p2_unit_weights() {
        // two proper 2-colorings, each of total weight 3
        let got = chi_enumerate(&Graph::path(2), &WeightVector::unit(2), 2, &cfg()).unwrap();
        assert_eq!(got, QPoly::from_i64s(&[0, 0, 0, 2]));
    }

    #[test]
    fn one_color_on_an_edge_is_empty() {
        let got = chi_enumerate(&Graph::path(2), &WeightVector::unit(2), 1, &cfg()).unwrap();
        assert!(got.is_zero());
        assert!(
            chi_enumerate(&Graph::complete(3), &WeightVector::unit(3), 0, &cfg())
                .unwrap()
                .is_zero()
        );
    }

    #[test]
    fn p2_weights_one_two() {
        // colorings (2,1) -> q^4 and (1,2) -> q^5
        let lam = WeightVector::new(vec![1, 2]).unwrap();
        let got = chi_enumerate(&Graph::path(2), &lam, 2, &cfg()).unwrap();
        assert_eq!(got, QPoly::from_i64s(&[0, 0, 0, 0, 1, 1]));
    }

    #[test]
    fn budget_is_enforced() {
        let mut config = cfg();
        config.max_oracle_work = 100;
        assert!(matches!(
            chi_enumerate(&Graph::path(4), &WeightVector::unit(4), 5, &config),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
