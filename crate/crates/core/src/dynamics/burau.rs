//! Reduced Burau representation.
//!
//! `σ_i` acts on `Z[t^±1]^{n-1}` by the identity outside rows and columns
//! `i-1, i, i+1` (1-based), where its block is
//!
//! ```text
//! [ 1   t   0 ]
//! [ 0  -t   0 ]
//! [ 0   1   1 ]
//! ```
//!
//! truncated at the ends, so `σ_1 ∈ B_2` maps to `[-t]`. A word maps to the
//! product of its letters from left to right.

use num_bigint::BigInt;

use crate::algebra::{IntMatrix, LaurentMatrix, LaurentPoly};
#[cfg(test)]
use crate::algebra::Poly;
use crate::braid::{BraidWord, Letter};
use crate::{Error, Result, Sign};

/// Right multiplication by one generator only rewrites column `i - 1`.
fn right_mul_laurent(m: &mut LaurentMatrix, letter: Letter) {
    let dim = m.size();
    let b = letter.index - 1;
    let (t, inv) = (LaurentPoly::t(), LaurentPoly::t_inv());
    for r in 0..dim {
        let mid = m.get(r, b);
        let mut v = match letter.sign {
            Sign::Pos => -&(&t * mid),
            Sign::Neg => -&(&inv * mid),
        };
        if b > 0 {
            let left = m.get(r, b - 1);
            v = match letter.sign {
                Sign::Pos => &v + &(&t * left),
                Sign::Neg => &v + left,
            };
        }
        if b + 1 < dim {
            let right = m.get(r, b + 1);
            v = match letter.sign {
                Sign::Pos => &v + right,
                Sign::Neg => &v + &(&inv * right),
            };
        }
        m.set(r, b, v);
    }
}

pub fn burau_reduced(beta: &BraidWord) -> LaurentMatrix {
    let dim = beta.strands().saturating_sub(1);
    let mut m = LaurentMatrix::identity(dim);
    for &l in beta.letters() {
        right_mul_laurent(&mut m, l);
    }
    m
}

/// The reduced Burau matrix at an integer `t`. Words with inverse letters
/// need `t = ±1`.
pub fn burau_at(beta: &BraidWord, t: i64) -> Result<IntMatrix> {
    if t != 1 && t != -1 {
        return burau_reduced(beta).eval_int(t);
    }
    let dim = beta.strands().saturating_sub(1);
    let mut m = IntMatrix::identity(dim);
    let t = BigInt::from(t);
    // at t = ±1 the inverse block has t^-1 = t
    for l in beta.letters() {
        let b = l.index - 1;
        for r in 0..dim {
            let mid = m.get(r, b);
            let mut v = -(&t * mid);
            if b > 0 {
                let left = m.get(r, b - 1);
                v += match l.sign {
                    Sign::Pos => &t * left,
                    Sign::Neg => left.clone(),
                };
            }
            if b + 1 < dim {
                let right = m.get(r, b + 1);
                v += match l.sign {
                    Sign::Pos => right.clone(),
                    Sign::Neg => &t * right,
                };
            }
            m.set(r, b, v);
        }
    }
    Ok(m)
}

/// The generator matrix of one letter; used as an independent check of the
/// column updates above.
pub fn burau_generator(strands: usize, letter: Letter) -> Result<LaurentMatrix> {
    if letter.index == 0 || letter.index >= strands {
        return Err(Error::Domain(format!("σ{} is not a generator of B{strands}", letter.index)));
    }
    let dim = strands - 1;
    let mut m = LaurentMatrix::identity(dim);
    let b = letter.index - 1;
    let (above, diag, below) = match letter.sign {
        Sign::Pos => (LaurentPoly::t(), -&LaurentPoly::t(), LaurentPoly::one()),
        Sign::Neg => (LaurentPoly::one(), -&LaurentPoly::t_inv(), LaurentPoly::t_inv()),
    };
    m.set(b, b, diag);
    if b > 0 {
        m.set(b - 1, b, above);
    }
    if b + 1 < dim {
        m.set(b + 1, b, below);
    }
    Ok(m)
}
