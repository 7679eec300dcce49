//! Dense polynomials in the formal variable q with arbitrary-precision
//! integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A polynomial in `Z[q]`, stored densely: `coeffs[i]` is the coefficient of
/// `q^i`. Trailing zeros are trimmed, so the zero polynomial is the empty
/// sequence and the last entry of a nonzero polynomial is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::new(vec![c])
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// The monomial `q^k`.
    pub fn q_power(k: usize) -> Self {
        QPoly::monomial(BigInt::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reverses the coefficients: `q^deg * p(1/q)`. Trailing zeros of the
    /// reversal (from a zero constant term of `p`) are trimmed, so this is
    /// `q^deg p(1/q)` as an exact element of `Z[q]` divided by no power.
    pub fn reversed(&self) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        QPoly::new(coeffs)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Evaluates at q = 1 (the sum of the coefficients).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The gcd of all coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; the sign convention keeps the leading
    /// coefficient's sign.
    pub fn primitive_part(&self) -> QPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division: returns `self / rhs` when the quotient lies in `Z[q]`
    /// and the remainder vanishes; errors otherwise. Used for gcd reduction
    /// and for q-binomial quotients, both of which are exact by construction.
    pub fn div_exact(&self, rhs: &QPoly) -> Result<QPoly> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let dn = self.coeffs.len();
        let dd = rhs.coeffs.len();
        if dn < dd {
            return Err(Error::InternalMismatch(
                "inexact polynomial division".into(),
            ));
        }
        let lead = &rhs.coeffs[dd - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd - 1]);
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InternalMismatch(
                    "inexact polynomial division".into(),
                ));
            }
            for i in 0..dd - 1 {
                rem[k + i] -= &qk * &rhs.coeffs[i];
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalMismatch(
                "inexact polynomial division".into(),
            ));
        }
        Ok(QPoly::new(quot))
    }

    /// Pseudo-remainder of `self` by `rhs`: `prem(a, b)` with
    /// `lc(b)^(deg a - deg b + 1) * a = q*b + prem`.
    fn pseudo_rem(&self, rhs: &QPoly) -> QPoly {
        let db = rhs.coeffs.len() - 1;
        let lead = &rhs.coeffs[db];
        let mut rem = self.coeffs.clone();
        while rem.len() > db && !rem.is_empty() {
            let da = rem.len() - 1;
            if rem[da].is_zero() {
                rem.pop();
                continue;
            }
            let top = rem[da].clone();
            for c in rem.iter_mut() {
                *c *= lead;
            }
            for i in 0..db {
                rem[da - db + i] -= &top * &rhs.coeffs[i];
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        QPoly::new(rem)
    }

    /// Polynomial gcd over `Z[q]`: the gcd of the contents times the
    /// primitive gcd with positive leading coefficient, so `gcd(a, b)`
    /// divides both exactly. Large inputs go through the verified modular
    /// algorithm; small ones and fallbacks use the primitive Euclidean
    /// algorithm.
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.positive_leading();
        }
        if rhs.is_zero() {
            return self.positive_leading();
        }
        let cont = self.content().gcd(&rhs.content());
        let a = self.primitive_part();
        let b = rhs.primitive_part();
        let min_deg = a.coeffs.len().min(b.coeffs.len()) - 1;
        let primitive = if min_deg == 0 {
            QPoly::one()
        } else if min_deg < 8 {
            Self::gcd_prs(a, b)
        } else {
            crate::qalgebra::zgcd::gcd_modular(&a, &b).unwrap_or_else(|| Self::gcd_prs(a, b))
        };
        primitive.scale(&cont)
    }

    fn gcd_prs(mut a: QPoly, mut b: QPoly) -> QPoly {
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.positive_leading()
    }

    /// Negates if the leading coefficient is negative.
    pub fn positive_leading(&self) -> QPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Renders in LaTeX, descending powers: `2q^{12} + 8q^{11} + \cdots`.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{{{i}}}")),
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    /// Plain-text rendering, descending powers: `2*q^3 - q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            match (show_coeff, i) {
                (true, 0) => write!(f, "{mag}")?,
                (true, 1) => write!(f, "{mag}*q")?,
                (true, _) => write!(f, "{mag}*q^{i}")?,
                (false, 1) => write!(f, "q")?,
                (false, _) => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        QPoly::new(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        QPoly::new(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QPoly::new(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $fn:ident),*) => {$(
        impl $trait for QPoly {
            type Output = QPoly;
            fn $fn(self, rhs: QPoly) -> QPoly {
                (&self).$fn(&rhs)
            }
        }
        impl $trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $fn(self, rhs: &QPoly) -> QPoly {
                (&self).$fn(rhs)
            }
        }
    )*};
}
forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Serialize for QPoly {
    /// Decimal-string coefficient array, ascending in q.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(
                s.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad coefficient {s:?}: {e}")))?,
            );
        }
        Ok(QPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn difference_of_squares() {
        // (1+q)(1-q) = 1 - q^2
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
    }

    #[test]
    fn trimming_and_degree() {
        assert!(QPoly::new(vec![BigInt::zero(); 4]).is_zero());
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!((&p(&[1, 2]) - &p(&[1, 2])), QPoly::zero());
    }

    #[test]
    fn gcd_by_hand() {
        // gcd(q^2 - 1, q^2 + 2q + 1) = q + 1 up to normalization
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1]));
        assert_eq!(g, p(&[1, 1]));
        // gcd respects integer contents
        let g = p(&[2, 2]).gcd(&p(&[4]));
        assert_eq!(g, p(&[2]));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1]) * &p(&[-3, 0, 2]);
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[-3, 0, 2]));
        assert!(p(&[1, 1]).div_exact(&p(&[2])).is_err());
        assert!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[32, -8, 0, 2]).to_string(), "2*q^3 - 8*q + 32");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 0, 2]).latex(), "2q^{2} + 1");
    }

    #[test]
    fn serde_round_trip() {
        let a = p(&[12, 0, -7, 3]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"["12","0","-7","3"]"#);
        let back: QPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
