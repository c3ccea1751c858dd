use num_bigint::BigInt;

use super::matrix::IntMatrix;
use super::modp::{add_mod, inv_mod, mul_mod, primes_below_2_62, reduce, sub_mod, CrtAccumulator};
use super::poly::Poly;
use crate::{Error, Result};

/// Characteristic polynomial `det(xI - A)` over `Z`.
///
/// Computed by Hessenberg reduction modulo 62-bit primes and recombined by
/// CRT until the modulus exceeds twice the coefficient bound `(1 + |A|_inf)^n`.
pub fn charpoly(a: &IntMatrix) -> Result<Poly> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("charpoly of {}x{} matrix", a.rows(), a.cols())));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let bound: BigInt = (a.norm_inf() + 1u32).pow(n as u32);
    let target = bound * 2u32;
    let mut acc = CrtAccumulator::new(n + 1);
    for p in primes_below_2_62() {
        if acc.modulus() > &target {
            break;
        }
        let residues = charpoly_mod(a, p);
        acc.push(&residues, p);
    }
    Ok(Poly::new(acc.symmetric()))
}

/// Coefficients of the characteristic polynomial mod `p`, low degree first.
pub fn charpoly_mod(a: &IntMatrix, p: u64) -> Vec<u64> {
    let n = a.rows();
    let mut h: Vec<Vec<u64>> =
        (0..n).map(|r| a.row(r).iter().map(|x| reduce(x, p)).collect()).collect();
    hessenberg(&mut h, p);

    // p_m(x) = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = add_mod(next[k + 1], c, p);
            next[k] = sub_mod(next[k], mul_mod(h[m][m], c, p), p);
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(h[i][m], prod, p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub_mod(next[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// In-place similarity reduction to upper Hessenberg form over `F_p`.
fn hessenberg(h: &mut [Vec<u64>], p: u64) {
    let n = h.len();
    for m in 0..n.saturating_sub(2) {
        let Some(piv) = (m + 1..n).find(|&i| h[i][m] != 0) else {
            continue;
        };
        if piv != m + 1 {
            h.swap(piv, m + 1);
            for row in h.iter_mut() {
                row.swap(piv, m + 1);
            }
        }
        let inv = inv_mod(h[m + 1][m], p);
        for i in m + 2..n {
            let u = mul_mod(h[i][m], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u row_{m+1}
            for j in 0..n {
                let v = mul_mod(u, h[m + 1][j], p);
                h[i][j] = sub_mod(h[i][j], v, p);
            }
            // col_{m+1} += u col_i
            for row in h.iter_mut() {
                let v = mul_mod(u, row[i], p);
                row[m + 1] = add_mod(row[m + 1], v, p);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn small_cases() {
        // [[2,1],[1,3]]: x^2 - 5x + 5
        assert_eq!(charpoly(&m(&[&[2, 1], &[1, 3]])).unwrap(), Poly::from_i64(&[5, -5, 1]));
        // unipotent -> (x-1)^3
        let u = m(&[&[1, 1, 0], &[0, 1, 0], &[0, -1, 1]]);
        assert_eq!(charpoly(&u).unwrap(), Poly::from_i64(&[-1, 3, -3, 1]));
        assert_eq!(charpoly(&IntMatrix::zeros(0, 0)).unwrap(), Poly::one());
    }

    #[test]
    fn matches_determinant_definition() {
        // constant term is (-1)^n det A, trace is -coeff(n-1)
        let a = m(&[&[3, -1, 4, 1], &[5, 9, -2, 6], &[5, 3, 5, -8], &[9, 7, -9, 3]]);
        let cp = charpoly(&a).unwrap();
        assert_eq!(cp.coeff(0), a.det().unwrap());
        assert_eq!(cp.coeff(3), BigInt::from(-20));
        assert_eq!(cp.leading(), BigInt::one());
    }

    #[test]
    fn large_entries() {
        let big = 1i64 << 40;
        let a = m(&[&[big, 1], &[-1, big]]);
        // x^2 - 2 big x + big^2 + 1
        let b = BigInt::from(big);
        let expect = Poly::new(vec![&b * &b + 1u32, -(&b * 2u32), BigInt::one()]);
        assert_eq!(charpoly(&a).unwrap(), expect);
    }
}
