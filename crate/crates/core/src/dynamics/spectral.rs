//! Certified spectral radii of integer polynomials.
//!
//! Cyclotomic factors are divided out exactly, so a radius of exactly 1 is
//! detected without rounding. The remaining squarefree factor `q` is solved
//! with Aberth iterations in `f64`, then polished by Weierstrass steps in
//! fixed point with `P` fractional bits. For approximations `z_i` the
//! Weierstrass corrections `W_i = q(z_i) / (lc ∏_{j≠i} (z_i - z_j))` give
//! inclusion disks `D(z_i, d |W_i|)`: their union contains every root and a
//! connected component made of `m` disks contains exactly `m` roots. `q(z_i)`
//! is evaluated exactly; the remaining factors are taken in log space with a
//! relative slack far above `f64` rounding. `P` doubles until the bracket on
//! the radius is narrower than the requested relative width.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::cyclotomic::{cyclotomic, euler_phi};
use crate::algebra::sturm::largest_real_root_modulus;
use crate::algebra::Poly;
use crate::{Error, Result};

/// Relative width of every certified bracket.
pub const SPECTRAL_REL_TOL: f64 = 1e-12;

/// Relative slack on quantities computed through `f64` logarithms.
const LOG_SLACK: f64 = 1e-12 * 1e-2;

const MAX_PRECISION: u32 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralRadius {
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    /// All roots are roots of unity (or there are none).
    pub periodic: bool,
}

impl SpectralRadius {
    fn exact(v: f64) -> SpectralRadius {
        SpectralRadius { value: v, lower: v, upper: v, periodic: true }
    }
}

/// Splits a squarefree part into its cyclotomic factors and the rest.
fn strip_cyclotomic(mut q: Poly) -> (Poly, bool) {
    let mut stripped = false;
    let Some(d) = q.degree() else { return (q, false) };
    // φ(m) >= sqrt(m / 2), so only m <= 2 d^2 can contribute
    let limit = 2 * (d as u64) * (d as u64) + 2;
    for m in 1..=limit {
        let deg = q.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        if euler_phi(m) > deg {
            continue;
        }
        let phi = cyclotomic(m);
        if let Some(rest) = q.div_exact(&phi) {
            q = rest;
            stripped = true;
        }
    }
    (q, stripped)
}

/// Spectral radius of the roots of `p`, certified to [`SPECTRAL_REL_TOL`].
pub fn spectral_radius(p: &Poly) -> Result<SpectralRadius> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has no spectral radius".into()));
    }
    let p = p.shift_down(p.low_order());
    if p.degree() == Some(0) {
        return Ok(SpectralRadius::exact(0.0));
    }
    let sq = p.squarefree_part();
    let (q, unimodular) = strip_cyclotomic(sq);
    if q.degree().unwrap_or(0) == 0 {
        return Ok(SpectralRadius::exact(if unimodular { 1.0 } else { 0.0 }));
    }
    let mut r = certify(&q)?;
    if unimodular && r.lower < 1.0 {
        if r.upper <= 1.0 {
            return Ok(SpectralRadius { value: 1.0, lower: 1.0, upper: 1.0, periodic: false });
        }
        r.lower = 1.0;
        r.value = 0.5 * (r.lower + r.upper);
    }
    // independent check on the real roots
    if let Some((_, hi)) = largest_real_root_modulus(&q, SPECTRAL_REL_TOL) {
        if hi * (1.0 - 1e-12) > r.upper {
            return Err(Error::Internal(format!(
                "a real root of modulus {hi} exceeds the certified radius {}",
                r.upper
            )));
        }
    }
    Ok(r)
}

fn aberth_f64(q: &Poly) -> Option<Vec<Complex64>> {
    let d = q.degree()?;
    let lc = q.leading().to_f64()?;
    let c: Vec<f64> = q.coeffs().iter().map(|x| x.to_f64().map(|v| v / lc)).collect::<Option<_>>()?;
    if c.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let radius = c[0].abs().powf(1.0 / d as f64).max(0.5);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let a = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, a)
        })
        .collect();
    for _ in 0..1000 {
        let mut worst = 0.0f64;
        for i in 0..d {
            let (mut v, mut dv) = (Complex64::new(c[d], 0.0), Complex64::zero());
            for k in (0..d).rev() {
                dv = dv * z[i] + v;
                v = v * z[i] + c[k];
            }
            if v == Complex64::zero() {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::one() - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                worst = worst.max(w.norm() / z[i].norm().max(1.0));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    Some(z)
}

/// Gaussian integer read as `(re + i im) / 2^P`.
#[derive(Debug, Clone, PartialEq)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

impl Fixed {
    fn from_c64(z: Complex64, prec: u32) -> Fixed {
        let conv = |x: f64| {
            let m = BigInt::from((x * 2f64.powi(52)).round() as i64);
            if prec >= 52 {
                m << (prec - 52)
            } else {
                m >> (52 - prec)
            }
        };
        Fixed { re: conv(z.re), im: conv(z.im) }
    }

    fn rescale(&self, from: u32, to: u32) -> Fixed {
        if to >= from {
            Fixed { re: &self.re << (to - from), im: &self.im << (to - from) }
        } else {
            Fixed { re: &self.re >> (from - to), im: &self.im >> (from - to) }
        }
    }

    fn sub(&self, o: &Fixed) -> Fixed {
        Fixed { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul(&self, o: &Fixed, prec: u32) -> Fixed {
        Fixed {
            re: (&self.re * &o.re - &self.im * &o.im) >> prec,
            im: (&self.re * &o.im + &self.im * &o.re) >> prec,
        }
    }

    fn div(&self, o: &Fixed, prec: u32) -> Option<Fixed> {
        let n2 = &o.re * &o.re + &o.im * &o.im;
        if n2.is_zero() {
            return None;
        }
        let re = ((&self.re * &o.re + &self.im * &o.im) << prec) / &n2;
        let im = ((&self.im * &o.re - &self.re * &o.im) << prec) / &n2;
        Some(Fixed { re, im })
    }

    fn norm2(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// `ln x` for a positive integer.
fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).to_f64().unwrap_or(f64::MAX);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// One Gauss-Seidel sweep of Weierstrass corrections; returns the largest
/// correction in units of `2^-prec`.
fn weierstrass_sweep(q: &[BigInt], z: &mut [Fixed], prec: u32) -> Option<BigInt> {
    let d = z.len();
    let lc = Fixed { re: &q[d] << prec, im: BigInt::zero() };
    let mut worst = BigInt::zero();
    for i in 0..d {
        let mut v = lc.clone();
        for k in (0..d).rev() {
            v = v.mul(&z[i], prec);
            v.re += &q[k] << prec;
        }
        let mut den = lc.clone();
        for j in 0..d {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]), prec);
            }
        }
        let w = v.div(&den, prec)?;
        worst = worst.max(w.re.abs().max(w.im.abs()));
        z[i] = z[i].sub(&w);
    }
    Some(worst)
}

struct Disk {
    centre_abs: f64,
    radius: f64,
}

/// Inclusion disks for exact centres `z`.
fn inclusion_disks(q: &[BigInt], z: &[Fixed], prec: u32) -> Option<(Vec<Disk>, Vec<Vec<f64>>)> {
    let d = z.len();
    let ln2 = std::f64::consts::LN_2;
    let ln_lc = ln_big(&q[d].abs());
    // ln |z_i - z_j|
    let mut ln_gap = vec![vec![0.0f64; d]; d];
    for i in 0..d {
        for j in i + 1..d {
            let n2 = z[i].sub(&z[j]).norm2();
            if n2.is_zero() {
                return None;
            }
            let v = 0.5 * ln_big(&n2) - prec as f64 * ln2;
            ln_gap[i][j] = v;
            ln_gap[j][i] = v;
        }
    }
    let mut disks = Vec::with_capacity(d);
    for i in 0..d {
        // exact 2^{P d} q(z_i) by Horner over Gaussian integers
        let (zr, zi) = (&z[i].re, &z[i].im);
        let (mut ar, mut ai) = (q[d].clone(), BigInt::zero());
        let mut pow = BigInt::one();
        for k in (0..d).rev() {
            pow <<= prec;
            let nr = &ar * zr - &ai * zi + &q[k] * &pow;
            let ni = &ar * zi + &ai * zr;
            ar = nr;
            ai = ni;
        }
        let n2 = &ar * &ar + &ai * &ai;
        let radius = if n2.is_zero() {
            0.0
        } else {
            let ln_q = 0.5 * ln_big(&n2) - (prec as f64) * (d as f64) * ln2;
            let ln_prod: f64 = (0..d).filter(|&j| j != i).map(|j| ln_gap[i][j]).sum();
            let ln_w = ln_q - ln_lc - ln_prod;
            (d as f64) * ln_w.exp() * (1.0 + LOG_SLACK)
        };
        let abs2 = z[i].norm2();
        let centre_abs = if abs2.is_zero() { 0.0 } else { (0.5 * ln_big(&abs2) - prec as f64 * ln2).exp() };
        disks.push(Disk { centre_abs, radius });
    }
    let gaps = ln_gap.iter().map(|row| row.iter().map(|v| v.exp()).collect()).collect();
    Some((disks, gaps))
}

/// Bracket `[lower, upper]` on the largest root modulus from the disks.
fn bracket(disks: &[Disk], gaps: &[Vec<f64>]) -> (f64, f64) {
    let d = disks.len();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..d {
        for j in i + 1..d {
            if gaps[i][j] * (1.0 - LOG_SLACK) <= disks[i].radius + disks[j].radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut comp_min = vec![f64::INFINITY; d];
    for (i, disk) in disks.iter().enumerate() {
        let r = find(&mut parent, i);
        let lo = (disk.centre_abs * (1.0 - LOG_SLACK) - disk.radius).max(0.0);
        comp_min[r] = comp_min[r].min(lo);
    }
    let lower = comp_min.into_iter().filter(|v| v.is_finite()).fold(0.0, f64::max);
    let upper = disks.iter().map(|k| k.centre_abs * (1.0 + LOG_SLACK) + k.radius).fold(0.0, f64::max);
    (lower, upper)
}

fn certify(q: &Poly) -> Result<SpectralRadius> {
    let d = q.degree().unwrap_or(0);
    let coeffs = q.coeffs().to_vec();
    if d == 1 {
        // the single root -q0 / q1
        let v = (ln_big(&coeffs[0].abs()) - ln_big(&coeffs[1].abs())).exp();
        return Ok(SpectralRadius { value: v, lower: v, upper: v, periodic: false });
    }
    let start = aberth_f64(q).unwrap_or_else(|| {
        (0..d)
            .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
            .collect()
    });
    let mut prec = 128u32;
    let mut z: Vec<Fixed> = start.iter().map(|&c| Fixed::from_c64(c, prec)).collect();
    loop {
        for _ in 0..8 * (prec / 64) {
            match weierstrass_sweep(&coeffs, &mut z, prec) {
                Some(w) if w.bits() + 16 < prec as u64 / 2 => break,
                Some(_) => {}
                None => break,
            }
        }
        if let Some((disks, gaps)) = inclusion_disks(&coeffs, &z, prec) {
            let (lower, upper) = bracket(&disks, &gaps);
            if upper > 0.0 && upper - lower <= SPECTRAL_REL_TOL * upper {
                let value = 0.5 * (lower + upper);
                return Ok(SpectralRadius { value, lower, upper, periodic: false });
            }
        }
        if prec >= MAX_PRECISION {
            return Err(Error::Internal(format!(
                "spectral radius of a degree {d} factor did not certify at {prec} bits"
            )));
        }
        z = z.iter().map(|x| x.rescale(prec, 2 * prec)).collect();
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(spectral_radius(&Poly::from_i64(&[-1, 3, -3, 1])).unwrap().value, 1.0);
        assert_eq!(spectral_radius(&Poly::from_i64(&[0, 0, 1])).unwrap().value, 0.0);
        assert!(spectral_radius(&Poly::from_i64(&[1, 1, 1, 1, 1, 1, 1])).unwrap().periodic);
        let r = spectral_radius(&Poly::from_i64(&[-6, 1])).unwrap();
        assert_eq!(r.value, 6.0);
    }

    #[test]
    fn salem_and_golden() {
        let r = spectral_radius(&Poly::from_i64(&[1, 3, 1])).unwrap();
        assert!(close(r.value, 2.618_033_988_749_895));
        assert!(r.lower <= r.upper && r.upper - r.lower <= SPECTRAL_REL_TOL * r.upper);
        // Lehmer's polynomial
        let lehmer = Poly::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(close(spectral_radius(&lehmer).unwrap().value, 1.176_280_818_259_917));
    }

    #[test]
    fn complex_dominant_pair() {
        // x^6 + 2x^5 + 3x^4 + 3x^2 + 2x + 1: the largest roots are not real
        let p = Poly::from_i64(&[1, 2, 3, 0, 3, 2, 1]);
        let r = spectral_radius(&p).unwrap();
        assert!(close(r.value, 1.894_818_117_200_496));
    }

    #[test]
    fn mixed_with_cyclotomic_and_repeated() {
        let base = &Poly::from_i64(&[1, -1, 1]) * &Poly::from_i64(&[1, 3, 1]);
        let p = &(&base * &Poly::from_i64(&[-1, 1])) * &Poly::from_i64(&[1, 3, 1]);
        assert!(close(spectral_radius(&p).unwrap().value, 2.618_033_988_749_895));
        // x^2 - 2: roots ±√2, equal moduli
        assert!(close(spectral_radius(&Poly::from_i64(&[-2, 0, 1])).unwrap().value, std::f64::consts::SQRT_2));
    }

    #[test]
    fn high_degree() {
        // x^40 - x - 1 has a single root above 1 near 1.0175
        let mut c = vec![0i64; 41];
        c[0] = -1;
        c[1] = -1;
        c[40] = 1;
        let r = spectral_radius(&Poly::from_i64(&c)).unwrap();
        assert!(r.value > 1.0 && r.value < 1.03);
        assert!(r.upper - r.lower <= SPECTRAL_REL_TOL * r.upper);
    }
}
