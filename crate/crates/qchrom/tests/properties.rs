//! Property tests for the exact-arithmetic layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use qchrom::qalgebra::{q_int, QPoly, QRat};

fn arb_qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-9i64..=9, 0..=max_len).prop_map(|cs| QPoly::from_i64s(&cs))
}

fn arb_nonzero_qpoly(max_len: usize) -> impl Strategy<Value = QPoly> {
    arb_qpoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_qrat() -> impl Strategy<Value = QRat> {
    (arb_qpoly(5), arb_nonzero_qpoly(5)).prop_map(|(n, d)| QRat::new(n, d).unwrap())
}

/// 20 fixed rational sample points used for the numeric cross-checks.
fn sample_points() -> Vec<BigRational> {
    (1..=20)
        .map(|k| BigRational::new(BigInt::from(2 * k + 1), BigInt::from(k + 6)))
        .collect()
}

proptest! {
    /// Normalizing a normalized value is the identity: multiplying numerator
    /// and denominator by a common factor reaches the same representation.
    #[test]
    fn canonical_form_idempotence(r in arb_qrat(), g in arb_nonzero_qpoly(4)) {
        let blown = QRat::new(r.num() * &g, r.den() * &g).unwrap();
        prop_assert_eq!(&blown, &r);
        let renorm = QRat::new(r.num().clone(), r.den().clone()).unwrap();
        prop_assert_eq!(&renorm, &r);
    }

    /// Structural equality of field expressions agrees with evaluation at 20
    /// rational points (poles skipped).
    #[test]
    fn structural_equality_matches_evaluation(a in arb_qrat(), b in arb_qrat()) {
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        prop_assert_eq!(&lhs, &rhs);
        for q0 in sample_points() {
            // poles of the shared denominator are skipped
            if let (Ok(x), Ok(y)) = (lhs.eval(&q0), rhs.eval(&q0)) {
                prop_assert_eq!(x, y);
            }
        }
    }

    /// Series of a product is the truncated convolution of the series.
    #[test]
    fn series_prefix_multiplies_by_convolution(a in arb_qrat(), b in arb_qrat()) {
        let n = 8usize;
        let product = &a * &b;
        let (sa, sb, sp) = match (a.series_prefix(n), b.series_prefix(n), product.series_prefix(n)) {
            (Ok(x), Ok(y), Ok(z)) => (x, y, z),
            _ => return Ok(()), // pole at q = 0 in some factor
        };
        for k in 0..=n {
            let mut acc = BigRational::zero();
            for i in 0..=k {
                acc += &sa[i] * &sb[k - i];
            }
            prop_assert_eq!(&acc, &sp[k]);
        }
    }

    /// Division undoes multiplication away from zero.
    #[test]
    fn mul_div_round_trip(a in arb_qrat(), b in arb_qrat()) {
        prop_assume!(!b.is_zero());
        let back = (&a * &b).checked_div(&b).unwrap();
        prop_assert_eq!(back, a);
    }

    /// q-integer nodes are pairwise distinct in Q(q): [m]_q = [n]_q iff m = n.
    #[test]
    fn q_int_nodes_are_distinct(m in -12i64..=12, n in -12i64..=12) {
        prop_assert_eq!(q_int(m) == q_int(n), m == n);
    }
}
