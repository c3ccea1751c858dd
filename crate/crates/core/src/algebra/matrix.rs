use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::poly::Poly;
use crate::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<IntMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        let data = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        Ok(IntMatrix { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &IntMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(IntMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Appends zero columns on the right.
    pub fn pad_cols(&self, extra: usize) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.cols + extra);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> BigInt {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.abs()).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    /// Determinant by fraction-free Gaussian elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("det of {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    /// Invariant factors `d_1 | d_2 | ...`, nonnegative, one per diagonal slot
    /// (`min(rows, cols)` entries).
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut diag = Vec::with_capacity(m.min(n));
        for t in 0..m.min(n) {
            let Some((pr, pc)) = smallest_nonzero(&a, t) else {
                diag.resize(m.min(n), BigInt::zero());
                break;
            };
            a.swap(t, pr);
            for row in a.iter_mut() {
                row.swap(t, pc);
            }
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..n {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    let (pr, pc) = smallest_in_cross(&a, t);
                    a.swap(t, pr);
                    for row in a.iter_mut() {
                        row.swap(t, pc);
                    }
                    continue;
                }
                // Row and column are clear; enforce divisibility.
                let bad = (t + 1..m)
                    .find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
                match bad {
                    Some(i) => {
                        for j in t..n {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            diag.push(a[t][t].abs());
        }
        diag
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        self.smith_diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|r| self.row(r).iter().map(|x| x.to_i64()).collect()).collect()
    }
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` at or past the diagonal.
fn smallest_in_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut bv: Option<BigInt> = (!a[t][t].is_zero()).then(|| a[t][t].abs());
    let mut consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let x = &a[i][j];
        if !x.is_zero() && bv.as_ref().is_none_or(|b| x.abs() < *b) {
            bv = Some(x.abs());
            *best = (i, j);
        }
    };
    for i in t..a.len() {
        consider(i, t, &mut best);
    }
    for j in t..a[t].len() {
        consider(t, j, &mut best);
    }
    best
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Integer entries become JSON numbers when they fit in `i64`, strings otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

struct Cell<'a>(&'a BigInt);

impl Serialize for Cell<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

struct Row<'a>(&'a [BigInt]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in self.0 {
            seq.serialize_element(&Cell(x))?;
        }
        seq.end()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(&Row(self.row(r)))?;
        }
        seq.end()
    }
}

/// Serializes a list of integers with the same number-or-string rule.
pub(crate) fn serialize_bigint_vec<S: Serializer>(
    xs: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    Row(xs).serialize(s)
}

/// Determinant of a square matrix over `Z[t]` by Bareiss elimination.
pub fn det_poly(rows: &[Vec<Poly>]) -> Result<Poly> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::Dimension("determinant of a non-square polynomial matrix".into()));
    }
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a = rows.to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n {
        // Prefer the sparsest nonzero pivot to keep degrees low.
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].coeffs().len());
        let Some(p) = pivot else {
            return Ok(Poly::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = v.div_exact(&prev).ok_or_else(|| {
                    Error::Internal("Bareiss step was not exact".into())
                })?;
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn determinant() {
        assert_eq!(m(&[&[2, 1], &[1, 3]]).det().unwrap(), BigInt::from(5));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), BigInt::from(-1));
        assert_eq!(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det().unwrap(), BigInt::zero());
        assert_eq!(
            m(&[&[2, -1, 0, 3], &[1, 4, 2, 0], &[0, 1, 5, -2], &[3, 0, 1, 1]]).det().unwrap(),
            BigInt::from(-118)
        );
        assert!(m(&[&[1, 2]]).det().is_err());
    }

    #[test]
    fn smith_small() {
        assert_eq!(m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]).smith_diagonal(), ints(&[2, 6, 12]));
        assert_eq!(m(&[&[2, 0], &[0, 3]]).smith_diagonal(), ints(&[1, 6]));
        assert_eq!(m(&[&[0, 0], &[0, 0]]).smith_diagonal(), ints(&[0, 0]));
        assert_eq!(m(&[&[3, 0, 0]]).smith_diagonal(), ints(&[3]));
        assert_eq!(m(&[&[0, 2], &[0, 0]]).smith_diagonal(), ints(&[2, 0]));
    }

    #[test]
    fn products_and_shapes() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.mul(&IntMatrix::identity(2)).unwrap(), a);
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.minor(0, 1), m(&[&[3]]));
        assert_eq!(a.norm_inf(), BigInt::from(7));
        assert!(a.mul(&IntMatrix::identity(3)).is_err());
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,2],[3,4]]");
    }

    #[test]
    fn poly_determinant() {
        let p = |c: &[i64]| Poly::from_i64(c);
        // [[1-t, t], [-1, 1-t]] -> (1-t)^2 + t = t^2 - t + 1
        let rows = vec![vec![p(&[1, -1]), p(&[0, 1])], vec![p(&[-1]), p(&[1, -1])]];
        assert_eq!(det_poly(&rows).unwrap(), p(&[1, -1, 1]));
        let swap = vec![vec![Poly::zero(), p(&[1])], vec![p(&[1]), Poly::zero()]];
        assert_eq!(det_poly(&swap).unwrap(), p(&[-1]));
    }
}
