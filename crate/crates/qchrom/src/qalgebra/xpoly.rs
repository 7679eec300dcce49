//! Polynomials in the formal variable x with coefficients in Q(q).
//!
//! These house the q-chromatic polynomial itself: x stands for the q-integer
//! `[n]_q`, and the coefficients are canonical [`QRat`] elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qalgebra::{q_int, QPoly, QRat};

/// Dense polynomial over Q(q): `coeffs[j]` is the coefficient of `x^j`,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct XPoly {
    #[serde(with = "trimmed_coeffs")]
    coeffs: Vec<QRat>,
}

mod trimmed_coeffs {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[QRat], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<QRat>, D::Error> {
        let mut v = Vec::<QRat>::deserialize(d)?;
        while v.last().is_some_and(QRat::is_zero) {
            v.pop();
        }
        Ok(v)
    }
}

impl XPoly {
    pub fn new(mut coeffs: Vec<QRat>) -> Self {
        while coeffs.last().is_some_and(QRat::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: QRat) -> Self {
        XPoly::new(vec![c])
    }

    /// The monomial `c * x^j`.
    pub fn monomial(c: QRat, j: usize) -> Self {
        if c.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![QRat::zero(); j + 1];
        coeffs[j] = c;
        XPoly { coeffs }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        XPoly::monomial(QRat::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[QRat] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> QRat {
        self.coeffs.get(j).cloned().unwrap_or_else(QRat::zero)
    }

    /// The leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> QRat {
        self.coeffs.last().cloned().unwrap_or_else(QRat::zero)
    }

    pub fn scale(&self, c: &QRat) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        XPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes a Q(q) value for x (Horner).
    pub fn substitute_x(&self, x0: &QRat) -> QRat {
        let mut acc = QRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x0) + c;
        }
        acc
    }

    /// Evaluates at `x = [n]_q`.
    pub fn eval_at_qint(&self, n: i64) -> QRat {
        self.substitute_x(&q_int(n))
    }

    /// Maps every coefficient c(q) to c(1/q), cleared into canonical form.
    pub fn substitute_q_inverse(&self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(QRat::subst_q_inverse).collect(),
        }
    }

    /// Evaluates every coefficient at a rational q-value, producing the
    /// coefficient list (ascending in x) of a univariate rational polynomial.
    /// Errors when q0 is a root of any coefficient denominator.
    pub fn eval_q(&self, q0: &BigRational) -> Result<Vec<BigRational>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.eval(q0)?);
        }
        while out.last().is_some_and(BigRational::is_zero) {
            out.pop();
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the polynomial `p`, returning the
    /// cleared coefficients when all of them land in `Z[q]`.
    pub fn clear_denominators(&self, p: &QPoly) -> Option<Vec<QPoly>> {
        self.coeffs
            .iter()
            .map(|c| c.scale_poly(p).as_polynomial().cloned())
            .collect()
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            out.push_str(&c.latex());
            match j {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{{{j}}}")),
            }
        }
        out
    }
}

impl fmt::Display for XPoly {
    /// Plain-text rendering: `((2*q^2)/(q + 1))*x^2 - ((2*q^2)/(q + 1))*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            // pull the numerator's sign out of the term
            let negative = c
                .num()
                .leading_coeff()
                .is_some_and(num_traits::Signed::is_negative);
            let shown = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({shown})")?;
            match j {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{j}")?,
            }
        }
        Ok(())
    }
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(QRat::zero);
            let c = match rhs.coeffs.get(i) {
                Some(b) => &a + b,
                None => a,
            };
            coeffs.push(c);
        }
        XPoly::new(coeffs)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![QRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(coeffs)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $fn:ident),*) => {$(
        impl $trait for XPoly {
            type Output = XPoly;
            fn $fn(self, rhs: XPoly) -> XPoly {
                (&self).$fn(&rhs)
            }
        }
        impl $trait<&XPoly> for XPoly {
            type Output = XPoly;
            fn $fn(self, rhs: &XPoly) -> XPoly {
                (&self).$fn(rhs)
            }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    /// chi-tilde of P2 at lambda = (1,1): (2q^2/(q+1)) (x^2 - x).
    fn p2_tilde() -> XPoly {
        let c = QRat::new(p(&[0, 0, 2]), p(&[1, 1])).unwrap();
        XPoly::new(vec![QRat::zero(), -&c, c])
    }

    #[test]
    fn stable_substitution_matches_paper() {
        // x0 = 1/(1-q); result 2q^3/((1-q)^2 (1+q))
        let x0 = QRat::new(p(&[1]), p(&[1, -1])).unwrap();
        let got = p2_tilde().substitute_x(&x0);
        let den = &(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, 1]);
        assert_eq!(got, QRat::new(p(&[0, 0, 0, 2]), den).unwrap());
    }

    #[test]
    fn q_inverse_matches_paper_reciprocity_example() {
        // q^2 * tilde(1/q, x) = (2q x^2 - 2q x)/(1+q)
        let inv = p2_tilde().substitute_q_inverse();
        let q2 = QRat::from_poly(p(&[0, 0, 1]));
        let scaled = inv.scale(&q2);
        let c = QRat::new(p(&[0, 2]), p(&[1, 1])).unwrap();
        assert_eq!(scaled, XPoly::new(vec![QRat::zero(), -&c, c]));
    }

    #[test]
    fn eval_q_at_one_collapses_to_classical() {
        // tilde at q=1 is x^2 - x
        let coeffs = p2_tilde()
            .eval_q(&BigRational::from(BigInt::from(1)))
            .unwrap();
        let want: Vec<BigRational> = [0, -1, 1]
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect();
        assert_eq!(coeffs, want);
        // q = -1 is a pole of the coefficients
        assert!(p2_tilde()
            .eval_q(&BigRational::from(BigInt::from(-1)))
            .is_err());
    }

    #[test]
    fn eval_at_qint_gives_enumeration() {
        // chi(P2, 1; n=2) = 2q^3
        let v = p2_tilde().eval_at_qint(2);
        assert_eq!(v, QRat::from_poly(p(&[0, 0, 0, 2])));
        assert!(p2_tilde().eval_at_qint(0).is_zero());
        assert!(p2_tilde().eval_at_qint(1).is_zero());
    }

    #[test]
    fn serde_round_trip() {
        let t = p2_tilde();
        let json = serde_json::to_string(&t).unwrap();
        let back: XPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
