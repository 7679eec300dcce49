//! G-partitions: compositions of n into d positive parts that differ across
//! every edge, their counting function p_G(n), and the rational generating
//! function P_G(q) = sum_(n > 0) p_G(n) q^n.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::chromatic::{descent_data, stable_evaluation};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{QPoly, QRat};

/// Number of tuples m in Z_(>0)^V with sum n and m_v != m_w on every edge,
/// by brute force over the compositions of n into d positive parts.
pub fn count_gpartitions(graph: &Graph, n: u64, config: &RunConfig) -> Result<u64> {
    let d = graph.vertex_count();
    if d == 0 || (n as usize) < d {
        return Ok(0);
    }
    let work = compositions_count(n, d);
    if work > config.max_oracle_work {
        return Err(Error::BudgetExceeded(format!(
            "{work} compositions of {n} into {d} parts exceed max_oracle_work"
        )));
    }
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(a, b) in graph.edges() {
        earlier[b].push(a);
    }
    let mut parts = vec![0u64; d];
    let mut count = 0u64;
    walk(&earlier, 0, n, &mut parts, &mut count);
    Ok(count)
}

/// binom(n-1, d-1) as u128.
fn compositions_count(n: u64, d: usize) -> u128 {
    let mut acc: u128 = 1;
    for i in 0..d as u64 - 1 {
        acc = acc * (n - 1 - i) as u128 / (i + 1) as u128;
        if acc > u128::MAX / 64 {
            return u128::MAX;
        }
    }
    acc
}

fn walk(earlier: &[Vec<usize>], v: usize, remaining: u64, parts: &mut [u64], count: &mut u64) {
    let d = earlier.len();
    if v + 1 == d {
        // last part is forced
        if remaining >= 1 && earlier[v].iter().all(|&u| parts[u] != remaining) {
            *count += 1;
        }
        return;
    }
    // leave at least one unit for each later vertex
    let leftover = (d - v - 1) as u64;
    'parts: for m in 1..=remaining.saturating_sub(leftover) {
        for &u in &earlier[v] {
            if parts[u] == m {
                continue 'parts;
            }
        }
        parts[v] = m;
        walk(earlier, v + 1, remaining - m, parts, count);
    }
    parts[v] = 0;
}

/// P_G(q) with its cached coefficient prefix.
#[derive(Clone, Debug)]
pub struct GPartitionSeries {
    pub graph: Graph,
    pub series: QRat,
    /// p_G(0), p_G(1), ..., p_G(n_trunc).
    pub prefix: Vec<BigInt>,
}

/// Computes P_G(q) by both closed forms over (orientation, extension) pairs,
///
///   q^d     * sum q^(maj of the reversed word) / prod_(i=1..d) (1 - q^i)
///   q^binom(d+1,2) * sum q^(-maj)              / prod_(i=1..d) (1 - q^i)
///
/// asserts they agree, and caches the first coefficients. In the second form
/// maj <= binom(d, 2), so every cleared exponent binom(d+1,2) - maj is
/// at least d and the numerator needs no Laurent terms.
pub fn gpartition_series(graph: &Graph, config: &RunConfig) -> Result<GPartitionSeries> {
    let d = graph.vertex_count();
    let data = descent_data(graph);

    let num_op = QPoly::new(data.maj_op.iter().map(|&c| BigInt::from(c)).collect()).shift_up(d);
    let binom_top = d * (d + 1) / 2;
    let mut cleared = vec![BigInt::zero(); binom_top + 1];
    for (maj, &count) in data.maj.iter().enumerate() {
        if count > 0 {
            cleared[binom_top - maj] += BigInt::from(count);
        }
    }
    let num_rev = QPoly::new(cleared);

    let mut den = QPoly::one();
    for i in 1..=d {
        den = &den * &(&QPoly::one() - &QPoly::q_power(i));
    }

    let series = QRat::new(num_op, den.clone())?;
    let by_reversal = QRat::new(num_rev, den)?;
    if series != by_reversal {
        return Err(Error::InternalMismatch(
            "the two closed forms of P_G disagree".into(),
        ));
    }

    let mut prefix = Vec::with_capacity(config.n_trunc + 1);
    for c in series.series_prefix(config.n_trunc)? {
        if !c.denom().is_one() {
            return Err(Error::InternalMismatch(
                "P_G series coefficient is not an integer".into(),
            ));
        }
        prefix.push(c.to_integer());
    }
    Ok(GPartitionSeries {
        graph: graph.clone(),
        series,
        prefix,
    })
}

/// The leading coefficient of chi-tilde for unit weights, recovered from the
/// G-partition generating function via c^1_G(q) = (q^2 - q)^d P_G(1/q):
/// substitute q -> 1/q, clear negative powers, and scale.
pub fn leading_coeff_via_gpartitions(graph: &Graph, config: &RunConfig) -> Result<QRat> {
    let d = graph.vertex_count();
    let series = gpartition_series(graph, config)?.series;
    let inverted = series.subst_q_inverse();
    // (q^2 - q)^d = (-1)^d q^d (1 - q)^d
    let front = QPoly::from_i64s(&[0, -1, 1]).pow(d as u32);
    Ok(inverted.scale_poly(&front))
}

/// Asserts P_G(q) = chi-tilde(q, 1/(1-q)) (the stable principal evaluation,
/// X_G(q, q^2, q^3, ...) for unit weights) as canonical rational functions.
pub fn stable_bridge_check(graph: &Graph, config: &RunConfig) -> Result<bool> {
    let lhs = gpartition_series(graph, config)?.series;
    let rhs = stable_evaluation(graph, &WeightVector::unit(graph.vertex_count()), config)?;
    Ok(lhs == rhs)
}
