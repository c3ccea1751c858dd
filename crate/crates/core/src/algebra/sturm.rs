//! Real root counting and isolation with Sturm sequences over `Z[x]`.
//!
//! Points are dyadic rationals `num / 2^k`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;

/// `p, p', -rem(p, p'), ...`, each term scaled by a positive rational so
/// that coefficients stay primitive. `p` should be squarefree.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    if p.degree().unwrap_or(0) == 0 {
        return seq;
    }
    seq.push(p.derivative());
    loop {
        let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
        if b.degree().unwrap_or(0) == 0 {
            break;
        }
        // prem = lc(b)^e a mod b; negate, and undo the sign of lc(b)^e
        let e = a.degree().unwrap_or(0) - b.degree().unwrap_or(0) + 1;
        let mut r = -&a.pseudo_rem(b);
        if b.leading().is_negative() && e % 2 == 1 {
            r = -&r;
        }
        if r.is_zero() {
            break;
        }
        let c = r.content();
        let r = Poly::new(r.coeffs().iter().map(|x| x / &c).collect());
        seq.push(r);
    }
    seq
}

/// Sign of `p(num / 2^k)`.
pub fn sign_at(p: &Poly, num: &BigInt, k: u32) -> Ordering {
    let Some(d) = p.degree() else {
        return Ordering::Equal;
    };
    let scale = BigInt::one() << k;
    let mut pow = BigInt::one();
    let mut acc = p.leading();
    for i in (0..d).rev() {
        pow *= &scale;
        acc = &acc * num + p.coeff(i) * &pow;
    }
    acc.sign_ordering()
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

fn changes(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn variations_at(seq: &[Poly], num: &BigInt, k: u32) -> usize {
    changes(seq.iter().map(|p| sign_at(p, num, k)))
}

fn variations_at_infinity(seq: &[Poly]) -> usize {
    changes(seq.iter().map(|p| p.leading().sign_ordering()))
}

/// Number of distinct real roots of a squarefree `p` greater than `num / 2^k`.
pub fn roots_above(seq: &[Poly], num: &BigInt, k: u32) -> usize {
    variations_at(seq, num, k) - variations_at_infinity(seq)
}

pub fn count_real_roots(p: &Poly) -> usize {
    let seq = sturm_sequence(p);
    let at_neg: usize = changes(seq.iter().map(|q| {
        let s = q.leading().sign_ordering();
        if q.degree().unwrap_or(0) % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }));
    at_neg - variations_at_infinity(&seq)
}

/// Largest positive root of a squarefree `p`, as a bracket `(lo, hi]` of
/// dyadic rationals `(num, k)` with `hi - lo <= rel * hi`.
fn largest_positive_root(p: &Poly, rel: f64) -> Option<(f64, f64)> {
    let seq = sturm_sequence(p);
    if roots_above(&seq, &BigInt::zero(), 0) == 0 {
        return None;
    }
    // Cauchy bound 1 + max |c_i / c_d|
    let lc = p.leading().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = BigInt::one() + m / lc + BigInt::one();
    let mut k: u32 = 0;
    let mut lo = BigInt::zero();
    let mut hi = bound;
    loop {
        let (lf, hf) = (to_f64(&lo, k), to_f64(&hi, k));
        if hf - lf <= rel * hf {
            return Some((lf, hf));
        }
        lo <<= 1;
        hi <<= 1;
        k += 1;
        let mid: BigInt = (&lo + &hi) >> 1;
        if roots_above(&seq, &mid, k) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

fn to_f64(num: &BigInt, k: u32) -> f64 {
    let bits = num.bits();
    let shift = bits.saturating_sub(60);
    let top = num_traits::ToPrimitive::to_f64(&(num >> shift)).unwrap_or(f64::INFINITY);
    top * 2f64.powi(shift as i32 - k as i32)
}

/// Bracket for the largest absolute value of a real root of a squarefree
/// `p` with `p(0) != 0`, or `None` when `p` has no real roots.
pub fn largest_real_root_modulus(p: &Poly, rel: f64) -> Option<(f64, f64)> {
    let pos = largest_positive_root(p, rel);
    let neg = largest_positive_root(&p.reflect(), rel);
    match (pos, neg) {
        (Some(a), Some(b)) => Some(if a.1 >= b.1 { a } else { b }),
        (a, b) => a.or(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        // (x - 1)(x + 2)(x^2 + 1)
        let p = &(&Poly::from_i64(&[-1, 1]) * &Poly::from_i64(&[2, 1])) * &Poly::from_i64(&[1, 0, 1]);
        assert_eq!(count_real_roots(&p), 2);
        assert_eq!(count_real_roots(&Poly::from_i64(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&Poly::from_i64(&[-2, 0, 1])), 2);
        let seq = sturm_sequence(&p);
        assert_eq!(roots_above(&seq, &BigInt::from(1), 0), 0);
        assert_eq!(roots_above(&seq, &BigInt::from(1), 1), 1);
        assert_eq!(roots_above(&seq, &BigInt::from(-5), 0), 2);
    }

    #[test]
    fn golden_ratio_squared() {
        // x^2 + 3x + 1 has roots -(3 ± √5)/2
        let (lo, hi) = largest_real_root_modulus(&Poly::from_i64(&[1, 3, 1]), 1e-12).unwrap();
        let phi2 = 2.618_033_988_749_895_f64;
        assert!(lo <= phi2 && phi2 <= hi && hi - lo <= 1e-12 * hi);
        assert!(largest_real_root_modulus(&Poly::from_i64(&[1, 0, 1]), 1e-12).is_none());
    }

    #[test]
    fn exact_dyadic_root() {
        let (lo, hi) = largest_real_root_modulus(&Poly::from_i64(&[-3, 2]), 1e-12).unwrap();
        assert!(lo < 1.5 && 1.5 <= hi);
    }
}
