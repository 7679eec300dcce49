//! Exact Lagrange interpolation over Q(q).

use crate::error::{Error, Result};
use crate::qalgebra::{QRat, XPoly};

/// The unique polynomial of degree < points.len() through all points, exact
/// over Q(q). Errors when two nodes coincide.
///
/// Works from the master polynomial M(x) = prod (x - x_i): the i-th Lagrange
/// numerator is M/(x - x_i) by synthetic division, and its denominator is the
/// same quotient evaluated at x_i.
pub fn lagrange_interpolate(points: &[(QRat, QRat)]) -> Result<XPoly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(Error::DuplicateNodes);
            }
        }
    }
    if points.is_empty() {
        return Ok(XPoly::zero());
    }

    let mut master = XPoly::constant(QRat::one());
    for (xi, _) in points {
        let factor = XPoly::new(vec![-xi, QRat::one()]);
        master = &master * &factor;
    }

    let mut acc = XPoly::zero();
    for (xi, yi) in points {
        if yi.is_zero() {
            continue;
        }
        let quotient = synthetic_div(&master, xi);
        let denom = quotient.substitute_x(xi);
        acc = &acc + &quotient.scale(&yi.checked_div(&denom)?);
    }
    Ok(acc)
}

/// Divides `p` by the exact linear factor `(x - x0)`, discarding the
/// (zero) remainder.
fn synthetic_div(p: &XPoly, x0: &QRat) -> XPoly {
    let coeffs = p.coeffs();
    debug_assert!(!coeffs.is_empty());
    let mut out = vec![QRat::zero(); coeffs.len() - 1];
    let mut carry = QRat::zero();
    for k in (0..coeffs.len() - 1).rev() {
        carry = &coeffs[k + 1] + &(&carry * x0);
        out[k] = carry.clone();
    }
    XPoly::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{q_int, QPoly};

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn line_through_origin() {
        let pts = vec![(q_int(0), QRat::zero()), (q_int(1), QRat::one())];
        assert_eq!(lagrange_interpolate(&pts).unwrap(), XPoly::x());
    }

    #[test]
    fn exact_on_x_squared() {
        // any 3 points on x^2 reproduce x^2 exactly
        let sq = &XPoly::x() * &XPoly::x();
        let pts: Vec<_> = [0i64, 2, 5]
            .iter()
            .map(|&n| {
                let x = q_int(n);
                let y = sq.substitute_x(&x);
                (x, y)
            })
            .collect();
        assert_eq!(lagrange_interpolate(&pts).unwrap(), sq);
    }

    #[test]
    fn p2_unit_weights_from_three_values() {
        // chi(P2, (1,1)) at n = 0, 1, 2 is 0, 0, 2q^3;
        // the interpolant is (2q^2/(q+1)) (x^2 - x) (Example values)
        let pts = vec![
            (q_int(0), QRat::zero()),
            (q_int(1), QRat::zero()),
            (q_int(2), QRat::from_poly(p(&[0, 0, 0, 2]))),
        ];
        let got = lagrange_interpolate(&pts).unwrap();
        let c = QRat::new(p(&[0, 0, 2]), p(&[1, 1])).unwrap();
        assert_eq!(got, XPoly::new(vec![QRat::zero(), -&c, c]));
    }

    #[test]
    fn duplicate_nodes_error() {
        let pts = vec![(q_int(1), QRat::zero()), (q_int(1), QRat::one())];
        assert!(matches!(
            lagrange_interpolate(&pts),
            Err(Error::DuplicateNodes)
        ));
    }
}
