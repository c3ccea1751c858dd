use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::matrix::IntMatrix;
use super::poly::{render_terms, Poly};
use crate::{Error, Result};

/// Laurent polynomial `t^shift * poly(t)`.
///
/// Kept canonical: the constant term of `poly` is nonzero, and zero is
/// stored with `shift == 0`. Structural equality is therefore ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    shift: i64,
    poly: Poly,
}

impl LaurentPoly {
    pub fn new(shift: i64, poly: Poly) -> LaurentPoly {
        if poly.is_zero() {
            return LaurentPoly::zero();
        }
        let low = poly.low_order();
        LaurentPoly { shift: shift + low as i64, poly: poly.shift_down(low) }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for &(e, c) in terms {
            acc = &acc + &LaurentPoly::monomial(BigInt::from(c), e);
        }
        acc
    }

    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> LaurentPoly {
        LaurentPoly::new(0, Poly::constant(c))
    }

    pub fn monomial(c: BigInt, e: i64) -> LaurentPoly {
        LaurentPoly::new(e, Poly::constant(c))
    }

    pub fn t() -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), 1)
    }

    pub fn t_inv() -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), -1)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.shift + d as i64)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let k = e - self.shift;
        if k < 0 {
            BigInt::zero()
        } else {
            self.poly.coeff(k as usize)
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> Vec<(i64, BigInt)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.shift + k as i64, c.clone()))
            .collect()
    }

    /// The polynomial part once the lowest exponent is moved to zero.
    pub fn body(&self) -> &Poly {
        &self.poly
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        LaurentPoly::new(self.shift, self.poly.scale(c))
    }

    pub fn mul_monomial(&self, e: i64) -> LaurentPoly {
        LaurentPoly::new(self.shift + e, self.poly.clone())
    }

    /// Substitutes `t -> t^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> LaurentPoly {
        assert!(k != 0);
        let mut acc = LaurentPoly::zero();
        for (e, c) in self.terms() {
            acc = &acc + &LaurentPoly::monomial(c, e * k);
        }
        acc
    }

    /// Lowest exponent zero and positive leading coefficient.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let p = if self.poly.leading().is_negative() { -&self.poly } else { self.poly.clone() };
        LaurentPoly::new(0, p)
    }

    /// Evaluates at an integer; negative exponents require `t = ±1`.
    pub fn eval_int(&self, t: i64) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        let body = self.poly.eval(&BigInt::from(t));
        if self.shift >= 0 {
            return Ok(body * BigInt::from(t).pow(self.shift as u32));
        }
        match t {
            1 => Ok(body),
            -1 => Ok(if self.shift % 2 == 0 { body } else { -body }),
            _ => Err(Error::Domain(format!(
                "cannot evaluate a Laurent polynomial with t^{} at t = {t}",
                self.shift
            ))),
        }
    }

    pub fn display_with(&self, var: &str) -> String {
        render_terms(&self.terms(), var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn align(a: &LaurentPoly, b: &LaurentPoly) -> (i64, Poly, Poly) {
    if a.is_zero() {
        return (b.shift, Poly::zero(), b.poly.clone());
    }
    if b.is_zero() {
        return (a.shift, a.poly.clone(), Poly::zero());
    }
    let s = a.shift.min(b.shift);
    (s, a.poly.shift_up((a.shift - s) as usize), b.poly.shift_up((b.shift - s) as usize))
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (s, a, b) = align(self, rhs);
        LaurentPoly::new(s, &a + &b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (s, a, b) = align(self, rhs);
        LaurentPoly::new(s, &a - &b)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.shift + rhs.shift, &self.poly * &rhs.poly)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::new(self.shift, -&self.poly)
    }
}

/// Square matrix over `Z[t, t^-1]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(size: usize) -> LaurentMatrix {
        LaurentMatrix { size, entries: vec![LaurentPoly::zero(); size * size] }
    }

    pub fn identity(size: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zeros(size);
        for i in 0..size {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.size + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.size + c] = v;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        if self.size != other.size {
            return Err(Error::Dimension(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.size, other.size
            )));
        }
        let n = self.size;
        let mut out = LaurentMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Integer specialization; negative exponents require `t = ±1`.
    pub fn eval_int(&self, t: i64) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(self.size, self.size);
        for r in 0..self.size {
            for c in 0..self.size {
                m.set(r, c, self.get(r, c).eval_int(t)?);
            }
        }
        Ok(m)
    }

    pub fn rows_display(&self, var: &str) -> Vec<Vec<String>> {
        (0..self.size)
            .map(|r| (0..self.size).map(|c| self.get(r, c).display_with(var)).collect())
            .collect()
    }
}
