//! Arithmetic modulo word-sized primes and Chinese remaindering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::Poly;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes just below `2^62`, in decreasing order.
pub fn primes_below_2_62() -> impl Iterator<Item = u64> {
    let mut n: u64 = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

/// Incremental CRT for a vector of integers known to lie in `[-B, B]`.
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(len: usize) -> CrtAccumulator {
        CrtAccumulator { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn push(&mut self, residues: &[u64], p: u64) {
        let pb = BigInt::from(p);
        let m_inv = inv_mod(reduce(&self.modulus, p), p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = reduce(v, p);
            let k = mul_mod(sub_mod(r, cur, p), m_inv, p);
            *v += &self.modulus * BigInt::from(k);
        }
        self.modulus *= pb;
    }

    /// Values lifted to the symmetric range `(-M/2, M/2]`.
    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1u32;
        self.values
            .iter()
            .map(|v| if v > &half { v - &self.modulus } else { v.clone() })
            .collect()
    }
}

/// Reduces a polynomial's coefficients mod `p` (low degree first).
pub fn poly_mod(f: &Poly, p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = f.coeffs().iter().map(|c| reduce(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `a mod b` over `F_p`; `b` must have a nonzero leading residue.
pub fn poly_rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lc_inv = inv_mod(b[db], p);
    let mut r = a.to_vec();
    while r.len() > db {
        let top = r.len() - 1;
        let q = mul_mod(r[top], lc_inv, p);
        if q != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let k = top - db + j;
                r[k] = sub_mod(r[k], mul_mod(q, bj, p), p);
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// Monic gcd over `F_p`.
pub fn poly_gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = poly_rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(97) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(3_215_031_751));
        let ps: Vec<u64> = primes_below_2_62().take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| p < (1 << 62) && is_prime(p)));
    }

    #[test]
    fn crt_recovers_signed_values() {
        let vals = [BigInt::from(-12345678901234567890i128), BigInt::from(42), BigInt::zero()];
        let mut acc = CrtAccumulator::new(3);
        for p in primes_below_2_62().take(2) {
            let r: Vec<u64> = vals.iter().map(|v| reduce(v, p)).collect();
            acc.push(&r, p);
        }
        assert_eq!(acc.symmetric(), vals.to_vec());
    }

    #[test]
    fn modular_polys() {
        let p = 101;
        // (x^2 - 1) mod (x - 1) = 0
        assert!(poly_rem_mod(&[p - 1, 0, 1], &[p - 1, 1], p).is_empty());
        // gcd(x^2 - 1, x^2 + 2x + 1) = x + 1
        assert_eq!(poly_gcd_mod(&[p - 1, 0, 1], &[1, 2, 1], p), vec![1, 1]);
    }
}
