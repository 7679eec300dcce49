//! Modular gcd for integer polynomials: images modulo word-size primes are
//! combined by CRT and the candidate is verified by exact trial division,
//! so the result is always the true gcd. The caller falls back to the
//! primitive Euclidean algorithm when this declines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::qalgebra::QPoly;

/// gcd of two primitive polynomials with deg >= 1, or None to fall back.
pub(crate) fn gcd_modular(a: &QPoly, b: &QPoly) -> Option<QPoly> {
    let lc_gcd: BigInt = a
        .leading_coeff()
        .unwrap()
        .abs()
        .gcd(&b.leading_coeff().unwrap().abs());

    let mut best_deg = usize::MAX;
    let mut crt_coeffs: Vec<BigInt> = Vec::new();
    let mut crt_modulus = BigInt::zero();

    let mut primes_tried = 0usize;
    let mut p = (1u64 << 62) - 1;
    while primes_tried < 64 {
        p = previous_prime(p);
        primes_tried += 1;
        let pb = BigInt::from(p);
        if (a.leading_coeff().unwrap() % &pb).is_zero()
            || (b.leading_coeff().unwrap() % &pb).is_zero()
        {
            continue;
        }
        let am = reduce_mod(a, p);
        let bm = reduce_mod(b, p);
        let g = gcd_mod_p(am, bm, p);
        let gdeg = g.len() - 1;
        if gdeg == 0 {
            // coprime primitives
            return Some(QPoly::one());
        }
        if gdeg > best_deg {
            continue; // unlucky prime
        }
        if gdeg < best_deg {
            best_deg = gdeg;
            crt_coeffs = vec![BigInt::zero(); gdeg + 1];
            crt_modulus = BigInt::from(1);
        }
        // scale the monic image so that its leading coefficient matches a
        // known multiple of the true leading coefficient
        let scale = (&lc_gcd % &pb).mod_floor(&pb).to_u64().unwrap();
        let scaled: Vec<u64> = g.iter().map(|&c| mulmod(c, scale, p)).collect();
        crt_merge(&mut crt_coeffs, &mut crt_modulus, &scaled, p);

        let candidate = QPoly::new(crt_coeffs.clone())
            .primitive_part()
            .positive_leading();
        if !candidate.is_zero()
            && a.div_exact(&candidate).is_ok()
            && b.div_exact(&candidate).is_ok()
        {
            return Some(candidate);
        }
    }
    None
}

fn reduce_mod(p: &QPoly, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    p.coeffs()
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().unwrap())
        .collect()
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn invmod(a: u64, m: u64) -> u64 {
    // m is prime
    powmod(a, m - 2, m)
}

/// Monic gcd of two polynomials over Z_p (coefficient vectors, ascending).
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        rem_in_place(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
        trim(&mut b);
    }
    if a.is_empty() {
        return vec![0];
    }
    let inv = invmod(*a.last().unwrap(), p);
    for c in a.iter_mut() {
        *c = mulmod(*c, inv, p);
    }
    a
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv_lead = invmod(b[db], p);
    while a.len() > db {
        let da = a.len() - 1;
        let factor = mulmod(a[da], inv_lead, p);
        if factor != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let sub = mulmod(factor, bc, p);
                let idx = da - db + i;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        a.pop();
        trim(a);
        if a.is_empty() {
            return;
        }
    }
}

/// Merges one modular image into the CRT state, symmetric representatives.
fn crt_merge(coeffs: &mut [BigInt], modulus: &mut BigInt, image: &[u64], p: u64) {
    let pb = BigInt::from(p);
    if *modulus == BigInt::from(1) {
        let half = &pb / 2;
        for (c, &im) in coeffs.iter_mut().zip(image) {
            let mut v = BigInt::from(im);
            if v > half {
                v -= &pb;
            }
            *c = v;
        }
        *modulus = pb;
        return;
    }
    let m_mod_p = modulus.mod_floor(&pb).to_u64().unwrap();
    let m_inv = invmod(m_mod_p, p);
    let new_modulus: BigInt = &*modulus * &pb;
    let half = &new_modulus / 2;
    for (c, &im) in coeffs.iter_mut().zip(image) {
        // x = c + M * ((im - c) * M^-1 mod p)
        let c_mod_p = c.mod_floor(&pb).to_u64().unwrap();
        let diff = (im + p - c_mod_p) % p;
        let t = mulmod(diff, m_inv, p);
        let mut v = &*c + &*modulus * BigInt::from(t);
        v = v.mod_floor(&new_modulus);
        if v > half {
            v -= &new_modulus;
        }
        *c = v;
    }
    *modulus = new_modulus;
}

fn previous_prime(from: u64) -> u64 {
    let mut n = if from.is_multiple_of(2) {
        from - 1
    } else {
        from - 2
    };
    while !is_prime_u64(n) {
        n -= 2;
    }
    n
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64s(coeffs)
    }

    #[test]
    fn agrees_with_euclid_on_structured_products() {
        // common factor (q + 1)^2 (q^2 + q + 1)
        let g = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 1, 1]);
        let a = &g * &p(&[3, 0, 0, 1]);
        let b = &g * &p(&[-2, 5]);
        let got = gcd_modular(&a.primitive_part(), &b.primitive_part()).unwrap();
        assert_eq!(got, g);
    }

    #[test]
    fn coprime_inputs_return_one() {
        let got = gcd_modular(&p(&[1, 1]), &p(&[-1, 1])).unwrap();
        assert!(got.is_one());
    }

    #[test]
    fn large_coefficient_gcd() {
        use num_bigint::BigInt;
        // gcd coefficients exceed one word
        let big = BigInt::from(u64::MAX) * BigInt::from(12345u64);
        let g = QPoly::new(vec![big.clone(), BigInt::one()]);
        let a = (&g * &p(&[1, 2, 1])).primitive_part();
        let b = (&g * &p(&[5, -1])).primitive_part();
        let got = gcd_modular(&a, &b).unwrap();
        assert_eq!(got, g.primitive_part().positive_leading());
    }

    #[test]
    fn prime_machinery() {
        assert!(is_prime_u64((1 << 61) - 1)); // Mersenne prime
        assert!(!is_prime_u64(1 << 61));
        let q = previous_prime(1 << 62);
        assert!(is_prime_u64(q));
        assert_eq!(invmod(3, q), powmod(3, q - 2, q));
    }
}
