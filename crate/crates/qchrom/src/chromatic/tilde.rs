//! The interpolation pipeline: chi-tilde as an element of Q(q)[x].

use serde::Serialize;

use crate::chromatic::enumerate::{check_oracle_budget, chi_enumerate};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};
use crate::qalgebra::{lagrange_interpolate, q_int, QRat, XPoly};

/// The q-chromatic polynomial of a weighted graph: the unique polynomial in
/// x = [n]_q with chi-tilde([n]_q) = chi_G^lambda(q, n).
#[derive(Clone, Debug, Serialize)]
pub struct QChromPoly {
    pub graph: Graph,
    pub lambda: WeightVector,
    pub tilde: XPoly,
    pub degree: usize,
}

/// Interpolates the enumeration at the nodes [0]_q .. [Lambda_V]_q, then
/// verifies the result at two extra nodes. The x-degree of chi-tilde is
/// Lambda_V (each flat of the Möbius formula contributes x^Lambda_V), so the
/// verification failing means a real bug and aborts loudly.
pub fn chi_tilde(graph: &Graph, lambda: &WeightVector, config: &RunConfig) -> Result<QChromPoly> {
    let d = graph.vertex_count();
    assert_eq!(lambda.len(), d, "weight vector length mismatch");
    let total = lambda.total();
    check_oracle_budget(d, total + 2, config)?;

    let mut points: Vec<(QRat, QRat)> = Vec::with_capacity(total as usize + 1);
    for n in 0..=total {
        let value = chi_enumerate(graph, lambda, n, config)?;
        points.push((q_int(n as i64), QRat::from_poly(value)));
    }
    let tilde = lagrange_interpolate(&points)?;

    for n in total + 1..=total + 2 {
        let expected = chi_enumerate(graph, lambda, n, config)?;
        if tilde.eval_at_qint(n as i64) != QRat::from_poly(expected) {
            return Err(Error::DegreeBoundViolated(format!(
                "interpolant on {} nodes missed the enumeration at n = {n}",
                total + 1
            )));
        }
    }
    debug_assert!(tilde.coeff(0).is_zero(), "constant coefficient must vanish");

    let degree = tilde.degree().unwrap_or(0);
    Ok(QChromPoly {
        graph: graph.clone(),
        lambda: lambda.clone(),
        tilde,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::QPoly;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    fn qr(num: &[i64], den: &[i64]) -> QRat {
        QRat::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn single_vertex() {
        // chi = q [n]_q, so tilde = q x
        let g = Graph::edgeless(1);
        let got = chi_tilde(&g, &WeightVector::unit(1), &cfg()).unwrap();
        assert_eq!(
            got.tilde,
            XPoly::new(vec![QRat::zero(), QRat::from_poly(p(&[0, 1]))])
        );
        assert_eq!(got.degree, 1);
    }

    #[test]
    fn p2_unit_weights_table_row() {
        let got = chi_tilde(&Graph::path(2), &WeightVector::unit(2), &cfg()).unwrap();
        let c = qr(&[0, 0, 2], &[1, 1]);
        assert_eq!(got.tilde, XPoly::new(vec![QRat::zero(), -&c, c]));
        assert_eq!(got.degree, 2);
    }

    #[test]
    fn p2_weighted_table_row() {
        // lambda = (1,2): denominators (q+1)(q^2+q+1) and q^2+q+1
        let lam = WeightVector::new(vec![1, 2]).unwrap();
        let got = chi_tilde(&Graph::path(2), &lam, &cfg()).unwrap();
        let den3 = p(&[1, 2, 2, 1]); // (q+1)(q^2+q+1)
        let want = XPoly::new(vec![
            QRat::zero(),
            qr(&[0, 0, 0, -3], &[1, 1, 1]),
            QRat::new(p(&[0, 0, 0, 5, 2, -1]), den3.clone()).unwrap(),
            QRat::new(p(&[0, 0, 0, -2, 1, 1]), den3).unwrap(),
        ]);
        assert_eq!(got.tilde, want);
        assert_eq!(got.degree, 3);
    }
}
