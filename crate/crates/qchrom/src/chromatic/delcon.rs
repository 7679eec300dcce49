//! Deletion–contraction for weighted q-chromatic enumeration:
//! chi_G^lambda = chi_(G - e)^lambda - chi_(G/e)^(merged lambda).

use std::collections::HashMap;

use crate::config::RunConfig;
use crate::error::Result;
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{q_int_pow, QPoly};

/// chi_G^lambda(q, n) by the deletion–contraction recursion, pivoting on the
/// first edge in canonical order and memoizing on (graph, weights). The base
/// case is the edgeless graph: prod_v q^lambda_v [n]_(q^lambda_v).
pub fn chi_delcon(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    config: &RunConfig,
) -> Result<QPoly> {
    let _ = config;
    let mut memo: HashMap<(Graph, Vec<u64>), QPoly> = HashMap::new();
    Ok(rec(graph, lambda, n, &mut memo))
}

fn rec(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    memo: &mut HashMap<(Graph, Vec<u64>), QPoly>,
) -> QPoly {
    let key = (graph.clone(), lambda.weights().to_vec());
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let result = match graph.edges().first().copied() {
        None => {
            let mut acc = QPoly::one();
            for v in 0..graph.vertex_count() {
                let w = lambda.get(v);
                acc = &acc * &q_int_pow(n, w).shift_up(w as usize);
                if acc.is_zero() {
                    break;
                }
            }
            acc
        }
        Some(e) => {
            let deleted = graph.delete(e).expect("edge exists");
            let (contracted, merged) = graph.contract(e, lambda).expect("edge exists");
            &rec(&deleted, lambda, n, memo) - &rec(&contracted, &merged, n, memo)
        }
    };
    memo.insert(key, result.clone());
    result
}
