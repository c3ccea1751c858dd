use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::matrix::{serialize_bigint_vec, IntMatrix};

/// A finitely generated abelian group `Z^cols / rowspace(relations)`,
/// together with its invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroupPresentation {
    #[serde(skip)]
    relations: IntMatrix,
    /// One invariant factor per generator, zeros (free summands) last.
    #[serde(serialize_with = "serialize_bigint_vec")]
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroupPresentation {
    pub fn new(relations: IntMatrix) -> AbelianGroupPresentation {
        let mut factors = relations.smith_diagonal();
        // Generators beyond the relation count are free.
        factors.resize(relations.cols(), BigInt::zero());
        AbelianGroupPresentation { relations, invariant_factors: factors }
    }

    /// Direct sum; invariant factors are recomputed from the block relation matrix.
    pub fn direct_sum(parts: &[AbelianGroupPresentation]) -> AbelianGroupPresentation {
        let rows: usize = parts.iter().map(|p| p.relations.rows()).sum();
        let cols: usize = parts.iter().map(|p| p.relations.cols()).sum();
        let mut m = IntMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for r in 0..p.relations.rows() {
                for c in 0..p.relations.cols() {
                    m.set(r0 + r, c0 + c, p.relations.get(r, c).clone());
                }
            }
            r0 += p.relations.rows();
            c0 += p.relations.cols();
        }
        AbelianGroupPresentation::new(m)
    }

    /// `Z^k`.
    pub fn free(k: usize) -> AbelianGroupPresentation {
        AbelianGroupPresentation::new(IntMatrix::zeros(0, k))
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Factors other than 1, i.e. the cyclic summands actually present.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> =
            self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect();
        // Divisibility order puts zeros last already; keep it explicit.
        out.sort_by_key(|d| (d.is_zero(), d.clone()));
        out
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|d| d.is_zero()).count()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.iter().all(|d| d.is_one())
    }

    /// Order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank() == 0).then(|| self.invariant_factors.iter().product())
    }
}

/// `0`, or summands like `Z^2 + Z/2 + Z/6`.
impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion().iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_free() {
        let g = AbelianGroupPresentation::new(IntMatrix::from_rows(&[vec![3]]).unwrap());
        assert_eq!(g.to_string(), "Z/3");
        assert_eq!(g.order(), Some(BigInt::from(3)));
        let z2 = AbelianGroupPresentation::free(2);
        assert_eq!(z2.to_string(), "Z^2");
        assert_eq!(z2.order(), None);
        let trivial = AbelianGroupPresentation::new(IntMatrix::from_rows(&[vec![1]]).unwrap());
        assert!(trivial.is_trivial());
        assert_eq!(trivial.to_string(), "0");
        assert!(trivial.nontrivial_factors().is_empty());
    }

    #[test]
    fn sums() {
        let a = AbelianGroupPresentation::new(IntMatrix::from_rows(&[vec![2]]).unwrap());
        let b = AbelianGroupPresentation::new(IntMatrix::from_rows(&[vec![3]]).unwrap());
        let s = AbelianGroupPresentation::direct_sum(&[a, b, AbelianGroupPresentation::free(1)]);
        assert_eq!(s.to_string(), "Z + Z/6");
        assert_eq!(s.nontrivial_factors(), vec![BigInt::from(6), BigInt::zero()]);
    }
}
