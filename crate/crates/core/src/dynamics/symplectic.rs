//! Action of chain twists on `H_1(Σ_g; Z)`.
//!
//! Basis `a_1, ..., a_g, b_1, ..., b_g` with `<a_i, b_j> = δ_ij`, so the form
//! is `J = [[0, I], [-I, 0]]`. The chain classes are
//!
//! ```text
//! c_{2i-1} = a_i                  (1 <= i <= g)
//! c_{2i}   = b_i - b_{i+1}        (b_{g+1} = 0)
//! c_{2g+1} = -(a_1 + ... + a_g)
//! ```
//!
//! which meet consecutively once and satisfy `c_1 + c_3 + ... + c_{2g+1} = 0`.
//! The twist `t_i` acts by `x ↦ x + <x, c_i> c_i` and a word acts by the
//! product of its letters from left to right.

use num_bigint::BigInt;
use num_traits::Zero;

use super::twist::genus_of;
use crate::algebra::IntMatrix;
use crate::braid::BraidWord;
use crate::Result;

/// The standard symplectic form on `Z^{2g}`.
pub fn symplectic_form(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        j.set(i, g + i, BigInt::from(1));
        j.set(g + i, i, BigInt::from(-1));
    }
    j
}

/// Coordinates of `c_k`, `k` 1-based.
pub fn chain_class(g: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0i64; 2 * g];
    if k == 2 * g + 1 {
        v[..g].fill(-1);
    } else if k % 2 == 1 {
        v[(k - 1) / 2] = 1;
    } else {
        let i = k / 2 - 1;
        v[g + i] = 1;
        if i + 1 < g {
            v[g + i + 1] = -1;
        }
    }
    v
}

/// `<x, y> = x^T J y`.
fn pairing(g: usize, x: &[i64], y: &[i64]) -> i64 {
    (0..g).map(|i| x[i] * y[g + i] - x[g + i] * y[i]).sum()
}

pub fn symplectic_action(beta: &BraidWord) -> Result<IntMatrix> {
    let g = genus_of(beta.strands())?;
    let n = 2 * g;
    let classes: Vec<Vec<i64>> = (1..=2 * g + 1).map(|k| chain_class(g, k)).collect();
    let mut m = IntMatrix::identity(n);
    for l in beta.letters() {
        // M T with T = I + s c u^T, u_k = <e_k, c>
        let c = &classes[l.index - 1];
        let s = BigInt::from(l.sign.as_i64());
        let u: Vec<i64> = (0..n)
            .map(|k| {
                let mut e = vec![0i64; n];
                e[k] = 1;
                pairing(g, &e, c)
            })
            .collect();
        let mc: Vec<BigInt> = (0..n)
            .map(|r| {
                (0..n)
                    .filter(|&k| c[k] != 0)
                    .map(|k| m.get(r, k) * c[k])
                    .sum::<BigInt>()
                    * &s
            })
            .collect();
        for r in 0..n {
            if mc[r].is_zero() {
                continue;
            }
            for (k, &uk) in u.iter().enumerate() {
                if uk != 0 {
                    let v = m.get(r, k) + &mc[r] * uk;
                    m.set(r, k, v);
                }
            }
        }
    }
    Ok(m)
}

/// `M^T J M == J`.
pub fn is_symplectic(m: &IntMatrix) -> bool {
    if !m.is_square() || m.rows() % 2 != 0 {
        return false;
    }
    let j = symplectic_form(m.rows() / 2);
    match m.transpose().mul(&j).and_then(|x| x.mul(m)) {
        Ok(x) => x == j,
        Err(_) => false,
    }
}
