//! Leading-coefficient extraction by every route: directly from chi-tilde,
//! from the tree closed form, from descent statistics, and by the leaf
//! deletion–contraction recursion. The normalized fingerprint
//! ([d]_q!/q^d) * c^1_G(q) is the integer polynomial used by the tree scan.

use num_bigint::BigInt;

use crate::chromatic::pairs::descent_data;
use crate::chromatic::tilde::chi_tilde;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{q_factorial, q_int_poly, QPoly, QRat};

/// The top x-coefficient of chi-tilde, through the interpolation pipeline.
pub fn leading_coeff(graph: &Graph, lambda: &WeightVector, config: &RunConfig) -> Result<QRat> {
    Ok(chi_tilde(graph, lambda, config)?.tilde.leading_coeff())
}

/// Tree closed form (any weights); errors on non-trees.
pub use crate::chromatic::flats_formula::leading_coeff_tree;

/// c^1_G(q) = (1/[d]_q!) * sum over pairs (rho, sigma) of q^(d + maj sigma).
/// Unit weights only.
pub fn leading_coeff_orientations(graph: &Graph) -> QRat {
    let d = graph.vertex_count();
    let hist = maj_histogram_poly(graph);
    QRat::new(hist.shift_up(d), q_factorial(d as u64)).expect("factorial is nonzero")
}

/// sum over pairs (rho, sigma) of q^(maj sigma), as an integer polynomial.
fn maj_histogram_poly(graph: &Graph) -> QPoly {
    let data = descent_data(graph);
    QPoly::new(data.maj.iter().map(|&c| BigInt::from(c)).collect())
}

/// The normalized fingerprint ([d]_q!/q^d) * c^1_G(q), which equals the maj
/// generating polynomial over all (orientation, extension) pairs; its
/// coefficients are nonnegative integers by construction.
pub fn normalized_fingerprint(graph: &Graph) -> QPoly {
    maj_histogram_poly(graph)
}

/// Leading coefficient of a weighted tree by the leaf recursion
/// c_T(lambda) = (q^w (q-1)^(w-1) / [w]_q) c_T'(lambda')
///             - c_T'(lambda with w added to the leaf's neighbor),
/// where w is the weight of the chosen leaf. Base case: the one-vertex tree
/// of weight w has c = -(q^2 - q)^w / (1 - q^w).
pub fn leading_coeff_delcon(graph: &Graph, lambda: &WeightVector) -> Result<QRat> {
    if !graph.is_tree() {
        return Err(Error::NotATree(
            "leading_coeff_delcon requires a tree".into(),
        ));
    }
    Ok(delcon_rec(graph, lambda))
}

fn delcon_rec(graph: &Graph, lambda: &WeightVector) -> QRat {
    let d = graph.vertex_count();
    if d == 1 {
        let w = lambda.get(0);
        // -(q^2 - q)^w / (1 - q^w)
        let num = -&QPoly::from_i64s(&[-1, 1])
            .pow(w as u32)
            .shift_up(w as usize);
        let den = &QPoly::one() - &QPoly::q_power(w as usize);
        return QRat::new(num, den).expect("nonzero denominator");
    }
    // lowest-index leaf and its neighbor
    let mut degree = vec![0usize; d];
    for &(a, b) in graph.edges() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let leaf = (0..d).find(|&v| degree[v] == 1).expect("a tree has a leaf");
    let neighbor = graph
        .edges()
        .iter()
        .find_map(|&(a, b)| {
            if a == leaf {
                Some(b)
            } else if b == leaf {
                Some(a)
            } else {
                None
            }
        })
        .expect("leaf has a neighbor");
    let w = lambda.get(leaf);

    let smaller = delete_vertex(graph, leaf);
    let mut plain = Vec::with_capacity(d - 1);
    let mut merged = Vec::with_capacity(d - 1);
    for v in 0..d {
        if v == leaf {
            continue;
        }
        plain.push(lambda.get(v));
        merged.push(lambda.get(v) + if v == neighbor { w } else { 0 });
    }
    let c_plain = delcon_rec(&smaller, &WeightVector::new(plain).expect("positive"));
    let c_merged = delcon_rec(&smaller, &WeightVector::new(merged).expect("positive"));

    // q^w (q-1)^(w-1) / [w]_q
    let factor = QRat::new(
        QPoly::from_i64s(&[-1, 1])
            .pow(w as u32 - 1)
            .shift_up(w as usize),
        q_int_poly(w),
    )
    .expect("nonzero denominator");
    &(&factor * &c_plain) - &c_merged
}

fn delete_vertex(graph: &Graph, v: usize) -> Graph {
    let map = |x: usize| if x > v { x - 1 } else { x };
    let edges: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (map(a), map(b)))
        .collect();
    Graph::new(graph.vertex_count() - 1, edges)
}
