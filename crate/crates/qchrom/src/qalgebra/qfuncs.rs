//! q-combinatorial constants: q-integers, q-factorials, Gaussian binomials.

use num_bigint::BigInt;
use num_traits::One;

use crate::qalgebra::{QPoly, QRat};

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` for n >= 0, as a polynomial.
pub fn q_int_poly(n: u64) -> QPoly {
    QPoly::new(vec![BigInt::one(); n as usize])
}

/// `[n]_{q^k} = 1 + q^k + ... + q^(k(n-1))`, the q-integer in the variable q^k.
pub fn q_int_pow(n: u64, k: u64) -> QPoly {
    let (n, k) = (n as usize, k as usize);
    if n == 0 {
        return QPoly::zero();
    }
    let mut coeffs = vec![BigInt::ZERO; k * (n - 1) + 1];
    for i in 0..n {
        coeffs[k * i] = BigInt::one();
    }
    QPoly::new(coeffs)
}

/// The q-integer `[n]_q = (1 - q^n)/(1 - q)` for any integer n.
///
/// For n >= 0 this is the polynomial `1 + q + ... + q^(n-1)`; for n < 0 the
/// Laurent content is cleared into the denominator:
/// `[-n]_q = -[n]_q / q^n`, e.g. `[-2]_q = (-1 - q)/q^2`.
pub fn q_int(n: i64) -> QRat {
    if n >= 0 {
        QRat::from_poly(q_int_poly(n as u64))
    } else {
        let m = (-n) as u64;
        QRat::new(-&q_int_poly(m), QPoly::q_power(m as usize)).unwrap()
    }
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u64) -> QPoly {
    let mut acc = QPoly::one();
    for i in 1..=n {
        acc = &acc * &q_int_poly(i);
    }
    acc
}

/// The Gaussian binomial `[a choose b]_q = [a]_q! / ([b]_q! [a-b]_q!)`,
/// computed by exact polynomial division; zero when b > a.
pub fn q_binomial(a: u64, b: u64) -> QPoly {
    if b > a {
        return QPoly::zero();
    }
    let b = b.min(a - b);
    // incremental product/quotient: [a-b+i]_q joins the numerator, [i]_q leaves
    let mut acc = QPoly::one();
    for i in 1..=b {
        acc = &acc * &q_int_poly(a - b + i);
        acc = acc
            .div_exact(&q_int_poly(i))
            .expect("Gaussian binomial is a polynomial");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(3), QRat::from_poly(p(&[1, 1, 1])));
        assert_eq!(q_int(0), QRat::zero());
        assert_eq!(q_int(1), QRat::one());
        // [-2]_q = (-1 - q)/q^2, confirmed by clearing denominators by hand
        assert_eq!(q_int(-2), QRat::new(p(&[-1, -1]), p(&[0, 0, 1])).unwrap());
        // [-n]_q = -q^{-n} [n]_q as elements of Q(q)
        let lhs = q_int(-3);
        let rhs = q_int(3)
            .scale_poly(&-&QPoly::one())
            .checked_div(&QRat::from_poly(p(&[0, 0, 0, 1])))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_int_pow_examples() {
        assert_eq!(q_int_pow(3, 2), p(&[1, 0, 1, 0, 1]));
        assert_eq!(q_int_pow(0, 5), QPoly::zero());
        assert_eq!(q_int_pow(4, 1), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn q_factorial_by_hand() {
        // [3]_q! = (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
        assert_eq!(q_factorial(0), QPoly::one());
    }

    #[test]
    fn q_binomial_by_hand() {
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4 from the product formula
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binomial(5, 0), QPoly::one());
        assert_eq!(q_binomial(2, 4), QPoly::zero());
    }

    #[test]
    fn q_binomial_symmetry_and_pascal() {
        for a in 0..=10u64 {
            for b in 0..=a {
                assert_eq!(q_binomial(a, b), q_binomial(a, a - b));
                if a >= 1 && b >= 1 {
                    // [a,b] = [a-1,b-1] + q^b [a-1,b]
                    let rhs =
                        &q_binomial(a - 1, b - 1) + &q_binomial(a - 1, b).shift_up(b as usize);
                    assert_eq!(q_binomial(a, b), rhs);
                }
            }
        }
    }
}
