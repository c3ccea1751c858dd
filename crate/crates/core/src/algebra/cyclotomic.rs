use num_bigint::BigInt;

use super::poly::Poly;

/// Euler's totient.
pub fn euler_phi(mut m: u64) -> u64 {
    let mut out = m;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            while m % q == 0 {
                m /= q;
            }
            out -= out / q;
        }
        q += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Möbius function.
pub fn mobius(mut m: u64) -> i32 {
    let mut sign = 1;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            m /= q;
            if m % q == 0 {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// The `m`-th cyclotomic polynomial, from `prod_{d | m} (x^d - 1)^{mu(m/d)}`.
pub fn cyclotomic(m: u64) -> Poly {
    assert!(m >= 1);
    let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    let mut acc: Vec<i64> = vec![1];
    for &d in &divisors {
        if mobius(m / d) == 1 {
            // multiply by x^d - 1
            let mut next = vec![0i64; acc.len() + d as usize];
            for (k, &c) in acc.iter().enumerate() {
                next[k + d as usize] += c;
                next[k] -= c;
            }
            acc = next;
        }
    }
    for &d in &divisors {
        if mobius(m / d) == -1 {
            // divide by the monic x^d - 1: q_k = a_{k+d} shifted, synthetic
            let d = d as usize;
            let n = acc.len() - 1;
            let mut q = vec![0i64; n - d + 1];
            let mut r = acc.clone();
            for k in (0..=n - d).rev() {
                let c = r[k + d];
                q[k] = c;
                r[k + d] = 0;
                r[k] += c;
            }
            debug_assert!(r.iter().all(|&x| x == 0));
            acc = q;
        }
    }
    Poly::new(acc.into_iter().map(BigInt::from).collect())
}
