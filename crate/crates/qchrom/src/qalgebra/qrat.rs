//! Elements of the rational function field Q(q), kept in a canonical reduced
//! form so that field equality is structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qalgebra::QPoly;

/// A reduced quotient `num/den` of two integer polynomials.
///
/// Canonical form: `den` is nonzero with positive leading coefficient, and
/// `gcd(num, den)` over `Z[q]` — integer content included — is 1. Zero is
/// `0/1`. Every element of `Q(q)` has exactly one such representation, so
/// `==` decides field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawQRat", into = "RawQRat")]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

/// Serialization form: `{"num": [...], "den": [...]}` with decimal-string
/// coefficient arrays ascending in q.
#[derive(Serialize, Deserialize)]
struct RawQRat {
    num: QPoly,
    den: QPoly,
}

impl From<QRat> for RawQRat {
    fn from(r: QRat) -> Self {
        RawQRat {
            num: r.num,
            den: r.den,
        }
    }
}

impl TryFrom<RawQRat> for QRat {
    type Error = String;
    fn try_from(raw: RawQRat) -> std::result::Result<Self, String> {
        QRat::new(raw.num, raw.den).map_err(|e| e.to_string())
    }
}

impl QRat {
    /// Builds `num/den` in canonical form; errors when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Result<QRat> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: QPoly, den: QPoly) -> QRat {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return QRat {
                num,
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        if den.leading_coeff().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QRat { num, den }
    }

    pub fn zero() -> QRat {
        QRat {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> QRat {
        QRat {
            num: QPoly::one(),
            den: QPoly::one(),
        }
    }

    pub fn from_poly(p: QPoly) -> QRat {
        QRat {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> QRat {
        QRat::from_poly(QPoly::constant(BigInt::from(n)))
    }

    /// The monomial q.
    pub fn q() -> QRat {
        QRat::from_poly(QPoly::q_power(1))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the element lies in `Z[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the numerator when the element lies in `Z[q]`.
    pub fn as_polynomial(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<QRat> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> QRat {
        // num and den are coprime, so powers stay reduced.
        QRat {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> QRat {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    /// Multiplication by the polynomial `p` (cross-reducing against `den`).
    pub fn scale_poly(&self, p: &QPoly) -> QRat {
        if p.is_zero() || self.is_zero() {
            return QRat::zero();
        }
        let g = p.gcd(&self.den);
        if g.is_one() {
            QRat {
                num: &self.num * p,
                den: self.den.clone(),
            }
        } else {
            QRat {
                num: &self.num * &p.div_exact(&g).unwrap(),
                den: self.den.div_exact(&g).unwrap(),
            }
        }
    }

    /// Substitutes q -> 1/q and re-clears into canonical form.
    ///
    /// No gcd is needed: reversal preserves coprimality (reversed numerator
    /// and denominator have nonzero constant terms, and only one side gains
    /// a power of q), so the result only needs sign normalization.
    pub fn subst_q_inverse(&self) -> QRat {
        if self.is_zero() {
            return QRat::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        // num(1/q)/den(1/q) = q^(dd-dn) * rev(num)/rev(den)
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        let (mut num, mut den) = if dd >= dn {
            (rn.shift_up(dd - dn), rd)
        } else {
            (rn, rd.shift_up(dn - dd))
        };
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        QRat { num, den }
    }

    /// Evaluates at a rational q-value; errors when the value is a pole.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::CoefficientPole(q0.to_string()));
        }
        Ok(self.num.eval(q0) / d)
    }

    /// The first `n + 1` Maclaurin coefficients (orders `q^0 .. q^n`).
    /// Errors when the denominator vanishes at q = 0.
    pub fn series_prefix(&self, n: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let d0 = BigRational::from(d0);
        let mut out = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = BigRational::from(self.num.coeff(k));
            for i in 1..=k {
                let di = self.den.coeff(i);
                if !di.is_zero() {
                    acc -= BigRational::from(di) * &out[k - i];
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Renders in LaTeX: `\frac{num}{den}`, or just the numerator when the
    /// denominator is one.
    pub fn latex(&self) -> String {
        if self.den.is_one() {
            self.num.latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> QRat {
        QRat::from_poly(p)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: with b = g*b', d = g*d', the sum is (a*d' + c*b')/(g*b'*d')
        // and only the factor g can still divide the numerator.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // inputs reduced and dens coprime => already reduced
            if num.is_zero() {
                return QRat::zero();
            }
            return QRat { num, den };
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return QRat::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            QRat {
                num,
                den: &(&g * &b1) * &d1,
            }
        } else {
            let num = num.div_exact(&h).unwrap();
            let den = &(&g.div_exact(&h).unwrap() * &b1) * &d1;
            QRat::reduced(num, den)
        }
    }
}

impl Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        // cross-reduce before multiplying so the product is already canonical
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        QRat {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

impl Div for &QRat {
    type Output = QRat;
    /// Panics on a zero divisor; use [`QRat::checked_div`] to get an error.
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("zero divisor")
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $fn:ident),*) => {$(
        impl $trait for QRat {
            type Output = QRat;
            fn $fn(self, rhs: QRat) -> QRat {
                (&self).$fn(&rhs)
            }
        }
        impl $trait<&QRat> for QRat {
            type Output = QRat;
            fn $fn(self, rhs: &QRat) -> QRat {
                (&self).$fn(rhs)
            }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    fn r(num: &[i64], den: &[i64]) -> QRat {
        QRat::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        // (2q^2)/(q+1) + (-2q^2)/(q+1) = 0
        let a = r(&[0, 0, 2], &[1, 1]);
        let b = r(&[0, 0, -2], &[1, 1]);
        assert!((&a + &b).is_zero());
        assert_eq!(&a + &b, QRat::zero());
    }

    #[test]
    fn canonical_reduction() {
        // (q^2-1)/(q+1) = q-1
        let a = r(&[-1, 0, 1], &[1, 1]);
        assert_eq!(a, QRat::from_poly(p(&[-1, 1])));
        // sign normalization: 1/(-q+1) = (-1)/(q-1)
        let b = r(&[1], &[1, -1]);
        assert_eq!(b.den(), &p(&[-1, 1]));
        assert_eq!(b.num(), &p(&[-1]));
        // integer content reduction: (2q)/(4) = q/2
        let c = r(&[0, 2], &[4]);
        assert_eq!(c.num(), &p(&[0, 1]));
        assert_eq!(c.den(), &p(&[2]));
    }

    #[test]
    fn zero_divisor_is_an_error() {
        assert!(matches!(
            QRat::new(p(&[1]), QPoly::zero()),
            Err(Error::ZeroDivisor)
        ));
        assert!(matches!(
            QRat::one().checked_div(&QRat::zero()),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn field_arithmetic() {
        let a = r(&[0, 1], &[1, 1]); // q/(1+q)
        let b = r(&[1], &[1, 1]); // 1/(1+q)
        assert_eq!(&a + &b, QRat::one());
        let c = &a / &b;
        assert_eq!(c, QRat::from_poly(p(&[0, 1])));
    }

    #[test]
    fn q_inverse_substitution() {
        // (2q^2)/(q+1) at q -> 1/q becomes 2/(q(q+1)) = 2/(q^2+q)
        let a = r(&[0, 0, 2], &[1, 1]);
        assert_eq!(a.subst_q_inverse(), r(&[2], &[0, 1, 1]));
        // involutive
        assert_eq!(a.subst_q_inverse().subst_q_inverse(), a);
    }

    #[test]
    fn series_prefix_examples() {
        // 1/(1-q): geometric series
        let geo = r(&[1], &[1, -1]);
        let want: Vec<BigRational> = (0..4).map(|_| BigRational::one()).collect();
        assert_eq!(geo.series_prefix(3).unwrap(), want);
        // zero expands to zeros
        assert!(QRat::zero()
            .series_prefix(5)
            .unwrap()
            .iter()
            .all(|c| c.is_zero()));
        // pole at q = 0 is an error
        assert!(matches!(
            r(&[1], &[0, 1]).series_prefix(2),
            Err(Error::PoleAtZero)
        ));
    }

    #[test]
    fn series_prefix_p2_partition_series() {
        // 2q^3/((1-q)^2 (1+q)) = 2q^3 + 2q^4 + 4q^5 + ...
        let den = &(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, 1]);
        let s = QRat::new(p(&[0, 0, 0, 2]), den).unwrap();
        let got = s.series_prefix(5).unwrap();
        let want: Vec<i64> = vec![0, 0, 0, 2, 2, 4];
        for (g, w) in got.iter().zip(&want) {
            assert_eq!(g, &BigRational::from(BigInt::from(*w)));
        }
    }

    #[test]
    fn serde_round_trip() {
        let a = r(&[0, 0, 2], &[1, 1]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"num":["0","0","2"],"den":["1","1"]}"#);
        let back: QRat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
