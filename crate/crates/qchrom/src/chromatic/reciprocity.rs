//! Combinatorial reciprocity: (-1)^|V| q^Lambda chi-tilde(1/q, [-n]_(1/q))
//! equals the generating function over pairs of an n-coloring and a
//! compatible acyclic orientation.

use num_bigint::BigInt;

use crate::chromatic::flats_formula::chi_tilde_mobius;
use crate::config::RunConfig;
use crate::error::Result;
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{q_int_poly, QPoly, QRat, XPoly};

/// The left side, computed symbolically in Q(q). chi-tilde is obtained from
/// the flats formula; [`reciprocity_lhs_from_tilde`] accepts any chi-tilde.
pub fn reciprocity_lhs(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    config: &RunConfig,
) -> Result<QRat> {
    let tilde = chi_tilde_mobius(graph, lambda, config)?;
    Ok(reciprocity_lhs_from_tilde(
        &tilde,
        graph.vertex_count(),
        lambda.total(),
        n,
    ))
}

/// (-1)^d q^Lambda chi-tilde(1/q, [-n]_(1/q)), using [-n]_(1/q) = -q [n]_q.
pub fn reciprocity_lhs_from_tilde(tilde: &XPoly, d: usize, lambda_total: u64, n: u64) -> QRat {
    let inverted = tilde.substitute_q_inverse();
    let x0 = QRat::from_poly(-&q_int_poly(n).shift_up(1));
    let mut value = inverted.substitute_x(&x0);
    if d % 2 == 1 {
        value = -value;
    }
    value.scale_poly(&QPoly::q_power(lambda_total as usize))
}

/// The right side: the brute-force sum of q^(sum lambda_v c(v)) over all
/// colorings c : V -> {1..n} paired with every compatible acyclic
/// orientation. A directed cycle of a compatible orientation would have
/// weakly increasing colors all around, so it lies inside one color class;
/// the compatible orientations of a fixed c are therefore the orientations
/// forced on bichromatic edges combined with any acyclic orientation of the
/// monochromatic subgraph, which is what the inner enumeration counts.
pub fn reciprocity_rhs(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    config: &RunConfig,
) -> Result<QPoly> {
    let d = graph.vertex_count();
    crate::chromatic::enumerate::check_oracle_budget(d, n, config)?;
    let top = lambda.total() * n;
    let mut counts = vec![0u128; top as usize + 1];
    let mut coloring = vec![0u64; d];
    walk_colorings(graph, lambda, n, 0, 0, &mut coloring, &mut counts);
    Ok(QPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

fn walk_colorings(
    graph: &Graph,
    lambda: &WeightVector,
    n: u64,
    v: usize,
    exponent: u64,
    coloring: &mut [u64],
    counts: &mut [u128],
) {
    let d = graph.vertex_count();
    if v == d {
        let mono: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .copied()
            .filter(|&(a, b)| coloring[a] == coloring[b])
            .collect();
        counts[exponent as usize] += count_acyclic_orientations_brute(d, &mono);
        return;
    }
    for c in 1..=n {
        coloring[v] = c;
        walk_colorings(
            graph,
            lambda,
            n,
            v + 1,
            exponent + lambda.get(v) * c,
            coloring,
            counts,
        );
    }
}

/// Counts acyclic orientations of an edge set by trying all 2^m direction
/// assignments.
fn count_acyclic_orientations_brute(d: usize, edges: &[(usize, usize)]) -> u128 {
    let m = edges.len();
    let mut count = 0u128;
    'masks: for mask in 0u64..(1 << m) {
        // Kahn's algorithm on the oriented subgraph
        let mut indeg = vec![0u8; d];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); d];
        for (k, &(a, b)) in edges.iter().enumerate() {
            let (s, t) = if mask >> k & 1 == 1 { (a, b) } else { (b, a) };
            indeg[t] += 1;
            out[s].push(t);
        }
        let mut stack: Vec<usize> = (0..d).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &t in &out[v] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        if seen < d {
            continue 'masks;
        }
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::acyclic_orientations;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn p2_paper_instance() {
        let g = Graph::path(2);
        let lam = WeightVector::unit(2);
        let want = QPoly::from_i64s(&[0, 0, 2, 2, 2]);
        assert_eq!(reciprocity_rhs(&g, &lam, 2, &cfg()).unwrap(), want);
        assert_eq!(
            reciprocity_lhs(&g, &lam, 2, &cfg()).unwrap(),
            QRat::from_poly(want)
        );
    }

    #[test]
    fn n_equal_one_counts_acyclic_orientations() {
        // the constant coloring is compatible with every acyclic orientation
        for g in [Graph::path(3), Graph::complete(3), Graph::star(4)] {
            let d = g.vertex_count();
            let lam = WeightVector::unit(d);
            let rhs = reciprocity_rhs(&g, &lam, 1, &cfg()).unwrap();
            let count = acyclic_orientations(&g).len();
            assert_eq!(rhs, QPoly::monomial(BigInt::from(count), d));
            assert_eq!(
                reciprocity_lhs(&g, &lam, 1, &cfg()).unwrap(),
                QRat::from_poly(rhs)
            );
        }
    }

    #[test]
    fn path3_brute_force_pairs() {
        let g = Graph::path(3);
        let lam = WeightVector::unit(3);
        // direct pair enumeration over all 8 colorings x 4 orientations
        let orientations = acyclic_orientations(&g);
        let mut want = QPoly::zero();
        for c0 in 1..=2u64 {
            for c1 in 1..=2u64 {
                for c2 in 1..=2u64 {
                    let coloring = [c0, c1, c2];
                    for o in &orientations {
                        if o.arcs().all(|(s, t)| coloring[s] <= coloring[t]) {
                            let e = (c0 + c1 + c2) as usize;
                            want = &want + &QPoly::q_power(e);
                        }
                    }
                }
            }
        }
        assert_eq!(reciprocity_rhs(&g, &lam, 2, &cfg()).unwrap(), want);
        assert_eq!(
            reciprocity_lhs(&g, &lam, 2, &cfg()).unwrap(),
            QRat::from_poly(want)
        );
    }
}
