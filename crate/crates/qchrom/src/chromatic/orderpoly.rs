//! Weighted lattice-point counts of order polytopes and the Kim–Stanton
//! descent-statistic formula, for the order-polytope cross-checks
//! (unit weights: each lattice point m contributes q^(sum m_i)).

use num_bigint::BigInt;

use crate::chromatic::enumerate::check_oracle_budget;
use crate::config::RunConfig;
use crate::error::Result;
use crate::graphs::{for_each_linear_extension, LinearExtension, Poset};
use crate::qalgebra::{q_binomial, QPoly};

/// Sums q^(m_1 + ... + m_d) over integer points of the n-th dilate of the
/// order polytope of the poset: closed means 0 <= m_i <= n with m_i <= m_j on
/// relations; interior means 0 < m_i < n with strict inequalities on
/// relations.
pub fn order_polytope_ehr(
    poset: &Poset,
    n: u64,
    interior: bool,
    config: &RunConfig,
) -> Result<QPoly> {
    let d = poset.size();
    check_oracle_budget(d, n + 1, config)?;
    // visit elements in natural-label order so predecessors are set first
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by_key(|&e| poset.label(e));
    let mut values = vec![0u64; d];
    let mut counts = vec![0u128; (d as u64 * n) as usize + 1];
    walk(poset, &order, 0, n, interior, 0, &mut values, &mut counts);
    Ok(QPoly::new(counts.into_iter().map(BigInt::from).collect()))
}

#[allow(clippy::too_many_arguments)]
fn walk(
    poset: &Poset,
    order: &[usize],
    idx: usize,
    n: u64,
    interior: bool,
    total: u64,
    values: &mut [u64],
    counts: &mut [u128],
) {
    if idx == order.len() {
        counts[total as usize] += 1;
        return;
    }
    let e = order[idx];
    let mut lo = if interior { 1 } else { 0 };
    let hi = if interior { n.saturating_sub(1) } else { n };
    for &f in &order[..idx] {
        if poset.lt(f, e) {
            let bound = if interior { values[f] + 1 } else { values[f] };
            lo = lo.max(bound);
        }
    }
    for m in lo..=hi {
        values[e] = m;
        walk(
            poset,
            order,
            idx + 1,
            n,
            interior,
            total + m,
            values,
            counts,
        );
    }
}

/// ehr(q, n) = sum over linear extensions sigma of
/// q^(comaj sigma) [n + d - des(sigma) choose d]_q.
pub fn kim_stanton_ehr(poset: &Poset, n: u64) -> QPoly {
    let d = poset.size() as u64;
    let mut acc = QPoly::zero();
    for_each_linear_extension(poset, |perm| {
        let ext = LinearExtension::from_perm(perm.to_vec());
        let term = q_binomial(n + d - ext.des as u64, d).shift_up(ext.comaj);
        acc = &acc + &term;
    });
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn single_element_closed() {
        // points 0, 1, 2 of the segment [0, 2]
        let point = Poset::antichain(1);
        assert_eq!(
            order_polytope_ehr(&point, 2, false, &cfg()).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(kim_stanton_ehr(&point, 2), p(&[1, 1, 1]));
    }

    #[test]
    fn two_chain_first_dilate() {
        // points (0,0), (0,1), (1,1)
        let chain = Poset::chain(2);
        assert_eq!(
            order_polytope_ehr(&chain, 1, false, &cfg()).unwrap(),
            p(&[1, 1, 1])
        );
        assert_eq!(kim_stanton_ehr(&chain, 1), p(&[1, 1, 1]));
    }

    #[test]
    fn two_antichain_interior_of_third_dilate() {
        // 1 <= m_1, m_2 <= 2 freely: q^2 + 2q^3 + q^4
        let anti = Poset::antichain(2);
        assert_eq!(
            order_polytope_ehr(&anti, 3, true, &cfg()).unwrap(),
            p(&[0, 0, 1, 2, 1])
        );
    }

    #[test]
    fn closed_matches_kim_stanton_on_poset_family() {
        use crate::graphs::{acyclic_orientations, poset_of, Graph};
        for g in [Graph::path(4), Graph::star(4), Graph::complete(3)] {
            for o in acyclic_orientations(&g) {
                let poset = poset_of(&o);
                for n in 0..=3 {
                    assert_eq!(
                        order_polytope_ehr(&poset, n, false, &cfg()).unwrap(),
                        kim_stanton_ehr(&poset, n)
                    );
                }
            }
        }
    }

    #[test]
    fn interior_sums_give_chi_on_p2() {
        use crate::chromatic::chi_enumerate;
        use crate::graphs::{acyclic_orientations, poset_of, Graph, WeightVector};
        // sum over orientations of ehr-interior(n + 1) = chi(q, n)
        let g = Graph::path(2);
        for n in 0..=3u64 {
            let mut acc = QPoly::zero();
            for o in acyclic_orientations(&g) {
                let poset = poset_of(&o);
                acc = &acc + &order_polytope_ehr(&poset, n + 1, true, &cfg()).unwrap();
            }
            let want = chi_enumerate(&g, &WeightVector::unit(2), n, &cfg()).unwrap();
            assert_eq!(acc, want);
        }
    }
}
