//! Artin's faithful action of `B_n` on the free group `F_n`, used to decide
//! equality of braid words exactly.

use super::{BraidWord, Letter};
use crate::{Error, Result, Sign};

/// A freely reduced word in `x_1, ..., x_n`; `±k` stands for `x_k^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn generator(k: usize) -> FreeWord {
        FreeWord(vec![k as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&x| -x).collect())
    }

    fn append(&mut self, other: &FreeWord) {
        for &x in &other.0 {
            if self.0.last() == Some(&-x) {
                self.0.pop();
            } else {
                self.0.push(x);
            }
        }
    }

    fn product(parts: &[&FreeWord]) -> FreeWord {
        let mut out = FreeWord::default();
        for p in parts {
            out.append(p);
        }
        out
    }
}

/// Images of the free generators under the automorphism of a braid word.
fn action(word: &BraidWord) -> Vec<FreeWord> {
    let n = word.strands();
    let mut images: Vec<FreeWord> = (1..=n).map(FreeWord::generator).collect();
    for &letter in word.letters() {
        compose_letter(&mut images, letter);
    }
    images
}

/// `φ ← φ ∘ σ`: substitute the current images into the letter's action.
fn compose_letter(images: &mut [FreeWord], letter: Letter) {
    let i = letter.index - 1;
    let (xi, xj) = (images[i].clone(), images[i + 1].clone());
    match letter.sign {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        Sign::Pos => {
            images[i] = FreeWord::product(&[&xi, &xj, &xi.inverse()]);
            images[i + 1] = xi;
        }
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        Sign::Neg => {
            images[i + 1] = FreeWord::product(&[&xj.inverse(), &xi, &xj]);
            images[i] = xj;
        }
    }
}

/// Decides `a = b` in `B_n`.
///
/// Permutations are compared first as a cheap necessary condition; the
/// verdict comes from comparing the free-group automorphisms.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::Dimension(format!(
            "cannot compare braids on {} and {} strands",
            a.strands(),
            b.strands()
        )));
    }
    if a.letters() == b.letters() {
        return Ok(true);
    }
    if a.permutation() != b.permutation() {
        return Ok(false);
    }
    Ok(action(a) == action(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn relations_hold() {
        assert!(braid_equal(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
        assert!(braid_equal(&w("s1 s3", 4), &w("s3 s1", 4)).unwrap());
        assert!(braid_equal(&w("S1 S2 S1", 3), &w("S2 S1 S2", 3)).unwrap());
    }

    #[test]
    fn distinct_elements() {
        assert!(!braid_equal(&w("s1", 3), &w("s2", 3)).unwrap());
        // same permutation, different braid
        assert!(!braid_equal(&w("s1 s1", 3), &w("", 3)).unwrap());
        assert!(braid_equal(&w("s1 s2 s1 s2", 3), &w("s2 s1 s2 s2", 3)).unwrap());
        assert!(!braid_equal(&w("s1 s1 s2", 3), &w("s2 s1 s1", 3)).unwrap());
    }

    #[test]
    fn full_twist_is_central() {
        let delta2 = w("s1 s2 s1 s2 s1 s2", 3);
        let x = w("s1 S2", 3);
        let lhs = delta2.concat(&x).unwrap();
        let rhs = x.concat(&delta2).unwrap();
        assert!(braid_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(braid_equal(&w("s1", 3), &w("s1", 4)), Err(Error::Dimension(_))));
    }

    #[test]
    fn action_of_generator() {
        let images = action(&w("s1", 2));
        assert_eq!(images[0].letters(), &[1, 2, -1]);
        assert_eq!(images[1].letters(), &[1]);
        let back = action(&w("s1 S1", 2));
        assert_eq!(back[0].letters(), &[1]);
    }
}
