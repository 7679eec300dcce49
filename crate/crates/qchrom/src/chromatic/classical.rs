//! The classical (q = 1) chromatic polynomial over the integers, computed by
//! deletion–contraction. This is kept independent of all q-machinery so it
//! can serve as the oracle for the q = 1 collapse and for acyclic-orientation
//! counts.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graphs::{Graph, WeightVector};

/// Coefficients of chi_G(n) in n, ascending. Base case: the edgeless graph
/// on d vertices has chi = n^d.
pub fn chromatic_polynomial(graph: &Graph) -> Vec<BigInt> {
    let mut memo: HashMap<Graph, Vec<BigInt>> = HashMap::new();
    chi_rec(graph, &mut memo)
}

fn chi_rec(graph: &Graph, memo: &mut HashMap<Graph, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(hit) = memo.get(graph) {
        return hit.clone();
    }
    let result = match graph.edges().first().copied() {
        None => {
            let d = graph.vertex_count();
            let mut coeffs = vec![BigInt::zero(); d + 1];
            coeffs[d] = BigInt::one();
            coeffs
        }
        Some(e) => {
            let deleted = graph.delete(e).expect("edge exists");
            let (contracted, _) = graph
                .contract(e, &WeightVector::unit(graph.vertex_count()))
                .expect("edge exists");
            let a = chi_rec(&deleted, memo);
            let b = chi_rec(&contracted, memo);
            let mut coeffs = a;
            if coeffs.len() < b.len() {
                coeffs.resize(b.len(), BigInt::zero());
            }
            for (i, c) in b.into_iter().enumerate() {
                coeffs[i] -= c;
            }
            coeffs
        }
    };
    memo.insert(graph.clone(), result.clone());
    result
}

/// Evaluates an integer polynomial (ascending coefficients) at n.
pub fn eval_int_poly(coeffs: &[BigInt], n: i64) -> BigInt {
    let x = BigInt::from(n);
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Number of acyclic orientations, via Stanley's |chi_G(-1)|.
pub fn acyclic_orientation_count(graph: &Graph) -> BigInt {
    eval_int_poly(&chromatic_polynomial(graph), -1).abs()
}

/// The chromatic number, by brute-force search for the smallest working
/// color count. The edgeless graph on at least one vertex has xi = 1.
pub fn chromatic_number(graph: &Graph) -> usize {
    let d = graph.vertex_count();
    if d == 0 {
        return 0;
    }
    for k in 1..=d {
        if can_color(graph, k) {
            return k;
        }
    }
    d
}

fn can_color(graph: &Graph, k: usize) -> bool {
    let d = graph.vertex_count();
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(a, b) in graph.edges() {
        earlier[b].push(a);
    }
    let mut colors = vec![usize::MAX; d];
    fn walk(v: usize, k: usize, earlier: &[Vec<usize>], colors: &mut [usize]) -> bool {
        if v == earlier.len() {
            return true;
        }
        'colors: for c in 0..k {
            for &u in &earlier[v] {
                if colors[u] == c {
                    continue 'colors;
                }
            }
            colors[v] = c;
            if walk(v + 1, k, earlier, colors) {
                return true;
            }
        }
        colors[v] = usize::MAX;
        false
    }
    walk(0, k, &earlier, &mut colors)
}
