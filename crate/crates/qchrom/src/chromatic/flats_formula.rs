//! chi-tilde via the Möbius function of the lattice of flats.
//!
//! chi-tilde = q^Lambda_V * sum over flats S of mu(0, S) * prod over blocks C
//! of (1 - (1 + qx - x)^Lambda_C) / (1 - q^Lambda_C). For a tree every edge
//! subset is a flat and mu is (-1)^|S|, so the sum runs over all subsets.
//!
//! The sum is accumulated over a common denominator with pure Z[q]
//! arithmetic; only the final coefficients are reduced into canonical QRat
//! form.

use num_bigint::BigInt;
use num_traits::One;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{mobius_flats, Graph, WeightVector};
use crate::qalgebra::{QPoly, QRat, XPoly};

/// chi-tilde computed from flats and Möbius values (trees use the
/// all-subsets signed specialization, which enumerates the same terms).
pub fn chi_tilde_mobius(graph: &Graph, lambda: &WeightVector, config: &RunConfig) -> Result<XPoly> {
    let terms = signed_block_weights(graph, lambda, config)?;
    let total = lambda.total();
    Ok(mobius_sum(&terms, total))
}

/// The (mu, block-weight multiset) data of every flat.
fn signed_block_weights(
    graph: &Graph,
    lambda: &WeightVector,
    config: &RunConfig,
) -> Result<Vec<(i64, Vec<u64>)>> {
    if graph.is_tree() {
        let m = graph.edge_count();
        if (1u64 << m) > config.max_edge_subsets {
            return Err(Error::BudgetExceeded(format!(
                "2^{m} edge subsets exceed max_edge_subsets = {}",
                config.max_edge_subsets
            )));
        }
        let mut out = Vec::with_capacity(1 << m);
        let edges = graph.edges();
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
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            let weights = graph
                .components(&subset)
                .iter()
                .map(|block| lambda.sum_over(block))
                .collect();
            out.push((sign, weights));
        }
        Ok(out)
    } else {
        Ok(mobius_flats(graph, config)?
            .into_iter()
            .map(|(flat, mu)| {
                let weights = flat
                    .partition
                    .iter()
                    .map(|block| lambda.sum_over(block))
                    .collect();
                (mu, weights)
            })
            .collect())
    }
}

/// Accumulates q^Lambda * sum of mu * prod_C (1 - (1+(q-1)x)^w) / (1 - q^w)
/// over a single common denominator. Terms with the same block-weight
/// multiset are identical, so their Möbius values are merged first.
fn mobius_sum(raw_terms: &[(i64, Vec<u64>)], total: u64) -> XPoly {
    let mut grouped: std::collections::HashMap<Vec<u64>, i64> = std::collections::HashMap::new();
    for (mu, weights) in raw_terms {
        let mut key = weights.clone();
        key.sort_unstable();
        *grouped.entry(key).or_insert(0) += mu;
    }
    let mut terms: Vec<(i64, Vec<u64>)> = grouped.into_iter().map(|(w, mu)| (mu, w)).collect();
    terms.sort_by(|a, b| a.1.cmp(&b.1));
    let terms = &terms;
    let deg_x = total as usize;
    // lcm exponents: for each k, the max multiplicity of (1 - q^k) needed
    let mut max_mult = vec![0u32; deg_x + 1];
    let mut mults: Vec<Vec<u32>> = Vec::with_capacity(terms.len());
    for (_, weights) in terms {
        let mut mult = vec![0u32; deg_x + 1];
        for &w in weights {
            mult[w as usize] += 1;
        }
        for k in 1..=deg_x {
            max_mult[k] = max_mult[k].max(mult[k]);
        }
        mults.push(mult);
    }

    let one_minus_qk: Vec<QPoly> = (0..=deg_x)
        .map(|k| {
            let mut coeffs = vec![BigInt::ZERO; k + 1];
            coeffs[0] = BigInt::one();
            if k > 0 {
                coeffs[k] = BigInt::from(-1);
            }
            QPoly::new(coeffs)
        })
        .collect();

    let mut numerator: Vec<QPoly> = vec![QPoly::zero(); deg_x + 1];
    for ((mu, weights), mult) in terms.iter().zip(&mults) {
        if *mu == 0 {
            continue;
        }
        // prod_C numerator polynomials in x with Z[q] coefficients
        let mut prod: Vec<QPoly> = vec![QPoly::constant(BigInt::from(*mu))];
        for &w in weights {
            prod = zx_mul(&prod, &one_minus_power_term(w));
        }
        // scale by the missing denominator factors
        let mut scale = QPoly::one();
        for k in 1..=deg_x {
            for _ in mult[k]..max_mult[k] {
                scale = &scale * &one_minus_qk[k];
            }
        }
        for (j, c) in prod.into_iter().enumerate() {
            if !c.is_zero() {
                numerator[j] = &numerator[j] + &(&c * &scale);
            }
        }
    }

    let mut denominator = QPoly::one();
    for k in 1..=deg_x {
        for _ in 0..max_mult[k] {
            denominator = &denominator * &one_minus_qk[k];
        }
    }

    let coeffs: Vec<QRat> = numerator
        .into_iter()
        .map(|n| {
            QRat::new(n.shift_up(total as usize), denominator.clone()).expect("nonzero denominator")
        })
        .collect();
    XPoly::new(coeffs)
}

/// 1 - (1 + (q-1)x)^w as x-coefficients in Z[q]: the x^j coefficient is
/// -binom(w, j) (q-1)^j for j >= 1 and zero at j = 0.
fn one_minus_power_term(w: u64) -> Vec<QPoly> {
    let q_minus_one = QPoly::from_i64s(&[-1, 1]);
    let mut out = Vec::with_capacity(w as usize + 1);
    out.push(QPoly::zero());
    let mut binom = BigInt::one();
    let mut pow = QPoly::one();
    for j in 1..=w {
        binom = binom * BigInt::from(w - j + 1) / BigInt::from(j);
        pow = &pow * &q_minus_one;
        out.push(-&pow.scale(&binom));
    }
    out
}

/// Product of two polynomials in x with Z[q] coefficients.
fn zx_mul(a: &[QPoly], b: &[QPoly]) -> Vec<QPoly> {
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] = &out[i + j] + &(ca * cb);
            }
        }
    }
    out
}

/// Leading coefficient of chi-tilde for a tree, from the closed form
/// c = (-1)^d (q^2 - q)^Lambda * sum over edge subsets S of
/// prod over blocks 1/(1 - q^Lambda_C).
pub fn leading_coeff_tree(
    graph: &Graph,
    lambda: &WeightVector,
    config: &RunConfig,
) -> Result<QRat> {
    if !graph.is_tree() {
        return Err(Error::NotATree("leading_coeff_tree requires a tree".into()));
    }
    let d = graph.vertex_count();
    let total = lambda.total();
    let terms: Vec<(i64, Vec<u64>)> = signed_block_weights(graph, lambda, config)?
        .into_iter()
        .map(|(_, w)| (1, w)) // unsigned sum in the closed form
        .collect();

    let deg = total as usize;
    let mut max_mult = vec![0u32; deg + 1];
    let mut mults: Vec<Vec<u32>> = Vec::with_capacity(terms.len());
    for (_, weights) in &terms {
        let mut mult = vec![0u32; deg + 1];
        for &w in weights {
            mult[w as usize] += 1;
        }
        for k in 1..=deg {
            max_mult[k] = max_mult[k].max(mult[k]);
        }
        mults.push(mult);
    }
    let one_minus_qk: Vec<QPoly> = (0..=deg)
        .map(|k| {
            let mut coeffs = vec![BigInt::ZERO; k + 1];
            coeffs[0] = BigInt::one();
            if k > 0 {
                coeffs[k] = BigInt::from(-1);
            }
            QPoly::new(coeffs)
        })
        .collect();
    let mut numerator = QPoly::zero();
    for mult in &mults {
        let mut scale = QPoly::one();
        for k in 1..=deg {
            for _ in mult[k]..max_mult[k] {
                scale = &scale * &one_minus_qk[k];
            }
        }
        numerator = &numerator + &scale;
    }
    let mut denominator = QPoly::one();
    for k in 1..=deg {
        for _ in 0..max_mult[k] {
            denominator = &denominator * &one_minus_qk[k];
        }
    }
    // (q^2 - q)^Lambda = q^Lambda (q - 1)^Lambda
    let mut front = QPoly::from_i64s(&[-1, 1])
        .pow(total as u32)
        .shift_up(total as usize);
    if d % 2 == 1 {
        front = -&front;
    }
    Ok(QRat::from_poly(front) * QRat::new(numerator, denominator)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chi_enumerate, chi_tilde};

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn p2_matches_interpolation() {
        let g = Graph::path(2);
        let lam = WeightVector::unit(2);
        let via_flats = chi_tilde_mobius(&g, &lam, &cfg()).unwrap();
        let via_interp = chi_tilde(&g, &lam, &cfg()).unwrap().tilde;
        assert_eq!(via_flats, via_interp);
    }

    #[test]
    fn edgeless_two_vertices_is_q2_x2() {
        let g = Graph::edgeless(2);
        let got = chi_tilde_mobius(&g, &WeightVector::unit(2), &cfg()).unwrap();
        let want = XPoly::monomial(QRat::from_poly(p(&[0, 0, 1])), 2);
        assert_eq!(got, want);
    }

    #[test]
    fn triangle_matches_interpolation() {
        let k3 = Graph::complete(3);
        let lam = WeightVector::unit(3);
        let via_flats = chi_tilde_mobius(&k3, &lam, &cfg()).unwrap();
        let via_interp = chi_tilde(&k3, &lam, &cfg()).unwrap().tilde;
        assert_eq!(via_flats, via_interp);
    }

    #[test]
    fn weighted_path_agrees_with_enumeration() {
        let g = Graph::path(3);
        let lam = WeightVector::new(vec![2, 1, 3]).unwrap();
        let tilde = chi_tilde_mobius(&g, &lam, &cfg()).unwrap();
        for n in 0..=4 {
            let expected = chi_enumerate(&g, &lam, n, &cfg()).unwrap();
            assert_eq!(tilde.eval_at_qint(n as i64), QRat::from_poly(expected));
        }
    }

    #[test]
    fn tree_leading_coeff_p2() {
        let got = leading_coeff_tree(&Graph::path(2), &WeightVector::unit(2), &cfg()).unwrap();
        assert_eq!(got, QRat::new(p(&[0, 0, 2]), p(&[1, 1])).unwrap());
        assert!(leading_coeff_tree(&Graph::complete(3), &WeightVector::unit(3), &cfg()).is_err());
    }

    #[test]
    fn tree_leading_coeff_single_weighted_vertex() {
        // c = -(q^2 - q)^w / (1 - q^w); for w = 2 this is q^2(q-1)/(q+1)
        let g = Graph::edgeless(1);
        let lam = WeightVector::new(vec![2]).unwrap();
        let got = leading_coeff_tree(&g, &lam, &cfg()).unwrap();
        assert_eq!(got, QRat::new(p(&[0, 0, -1, 1]), p(&[1, 1])).unwrap());
    }

    /// phi(q, x, j) = -(1 - (1 + qx - x)^j) / (1 - q^j) as an XPoly.
    fn phi(j: u64) -> XPoly {
        let scale = QRat::new(
            QPoly::from_i64s(&[-1]),
            &QPoly::one() - &QPoly::q_power(j as usize),
        )
        .unwrap();
        XPoly::new(
            one_minus_power_term(j)
                .into_iter()
                .map(|c| QRat::from_poly(c) * &scale)
                .collect(),
        )
    }

    #[test]
    fn path_family_composition_sum() {
        // chi-tilde of the k-path = (-q)^k sum over compositions mu of k of
        // prod over parts m of phi(q, x, m), termwise for k <= 6
        fn compositions(k: u64) -> Vec<Vec<u64>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=k {
                for mut rest in compositions(k - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for k in 1..=6u64 {
            let mut acc = XPoly::zero();
            for mu in compositions(k) {
                let mut term = XPoly::constant(QRat::one());
                for m in mu {
                    term = &term * &phi(m);
                }
                acc = &acc + &term;
            }
            let mut front = QRat::from_poly(QPoly::q_power(k as usize));
            if k % 2 == 1 {
                front = -front;
            }
            let want = chi_tilde_mobius(
                &Graph::path(k as usize),
                &WeightVector::unit(k as usize),
                &cfg(),
            )
            .unwrap();
            assert_eq!(acc.scale(&front), want, "path family at k = {k}");
        }
    }

    #[test]
    fn star_family_binomial_sum() {
        // chi-tilde of the (k+1)-star = (-q)^(k+1) sum_j binom(k, j)
        // phi(q, x, j+1) (-x)^(k-j), termwise for k <= 5
        for k in 0..=5u64 {
            let d = (k + 1) as usize;
            let mut acc = XPoly::zero();
            for j in 0..=k {
                let binom = (0..j).fold(1u64, |acc, i| acc * (k - i) / (i + 1));
                let mut term = phi(j + 1).scale(&QRat::from_int(binom as i64));
                let minus_x = XPoly::monomial(QRat::from_int(-1), 1);
                for _ in 0..(k - j) {
                    term = &term * &minus_x;
                }
                acc = &acc + &term;
            }
            let mut front = QRat::from_poly(QPoly::q_power(d));
            if d % 2 == 1 {
                front = -front;
            }
            let want = chi_tilde_mobius(&Graph::star(d), &WeightVector::unit(d), &cfg()).unwrap();
            assert_eq!(acc.scale(&front), want, "star family at k = {k}");
        }
    }
}
