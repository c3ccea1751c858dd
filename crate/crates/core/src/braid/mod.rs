//! Braid words over a fixed number of strands.
//!
//! Letters are read left to right and stacked bottom to top, so `s1 s2`
//! means `σ1` below `σ2`. Stored words are always freely reduced.

mod artin;
mod perm;

use std::fmt;
use std::str::FromStr;

pub use artin::{braid_equal, FreeWord};
pub use perm::Permutation;

use crate::{Error, Result, Sign};

/// One Artin generator `σ_i^{±1}`; `index` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(index: usize) -> Letter {
        Letter { index, sign: Sign::Pos }
    }

    pub fn neg(index: usize) -> Letter {
        Letter { index, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, sign: self.sign.flip() }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "s{}", self.index),
            Sign::Neg => write!(f, "S{}", self.index),
        }
    }
}

/// A freely reduced word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every index against `strands` and freely
    /// reducing the result.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = Letter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::Domain("a braid needs at least one strand".into()));
        }
        let mut reduced: Vec<Letter> = Vec::new();
        for letter in letters {
            if letter.index == 0 || letter.index >= strands {
                return Err(Error::Malformed(format!(
                    "generator index {} outside [1, {}]",
                    letter.index,
                    strands - 1
                )));
            }
            push_reduced(&mut reduced, letter);
        }
        Ok(BraidWord { strands, letters: reduced })
    }

    pub fn identity(strands: usize) -> BraidWord {
        assert!(strands > 0, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    /// Parses `s3 s4 S2` style text (`S` is the inverse generator).
    pub fn parse(text: &str, strands: usize) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::Domain("a braid needs at least one strand".into()));
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (sign, digits) = if let Some(rest) = token.strip_prefix('s') {
                (Sign::Pos, rest)
            } else if let Some(rest) = token.strip_prefix('S') {
                (Sign::Neg, rest)
            } else {
                return Err(Error::Parse(format!("token `{token}` is not s<k> or S<k>")));
            };
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("token `{token}` has no integer index")))?;
            if index == 0 || index >= strands {
                return Err(Error::Malformed(format!(
                    "token `{token}`: index {index} outside [1, {}] for {strands} strands",
                    strands.saturating_sub(1)
                )));
            }
            letters.push(Letter { index, sign });
        }
        BraidWord::new(strands, letters)
    }

    pub(crate) fn from_reduced_unchecked(strands: usize, letters: Vec<Letter>) -> BraidWord {
        debug_assert!(letters.windows(2).all(|w| !w[0].cancels(w[1])));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (self below other).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord::from_reduced_unchecked(self.strands, letters)
    }

    /// The skew involution: reverse the word and send `σ_i` to `σ_{n-i}`,
    /// keeping each exponent.
    pub fn skew(&self) -> BraidWord {
        let n = self.strands;
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { index: n - l.index, sign: l.sign })
            .collect();
        BraidWord::from_reduced_unchecked(n, letters)
    }

    /// `skew(b) · b`. The junction never cancels because both letters there
    /// carry the same exponent, so the length is exactly `2 |b|`.
    pub fn tilde(&self) -> BraidWord {
        let mut letters = self.skew().letters;
        letters.extend_from_slice(&self.letters);
        BraidWord::from_reduced_unchecked(self.strands, letters)
    }

    /// Group-level test of `skew(b) = b`.
    pub fn is_skew_palindromic(&self) -> bool {
        let skewed = self.skew();
        if skewed.letters == self.letters {
            return true;
        }
        braid_equal(&skewed, self).expect("skew preserves the strand count")
    }

    /// Product of the transpositions `(i i+1)` over the letters, composed as
    /// functions with the leftmost letter applied last.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // images[k] = τ_{i1} ∘ ... ∘ τ_{ik}(k); prepend transpositions right to left.
        for l in self.letters.iter().rev() {
            let (a, b) = (l.index - 1, l.index);
            for img in images.iter_mut() {
                if *img == a {
                    *img = b;
                } else if *img == b {
                    *img = a;
                }
            }
        }
        Permutation::from_images(images).expect("transposition products are bijective")
    }

    /// Same letters on `2(g+1)` strands, where `self` has `g+1` strands.
    pub fn embed_for_plat(&self) -> Result<BraidWord> {
        if self.strands < 2 {
            return Err(Error::Domain(
                "embedding for a plat closure needs g >= 1, i.e. at least two strands".into(),
            ));
        }
        Ok(BraidWord::from_reduced_unchecked(2 * self.strands, self.letters.clone()))
    }

    fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::Dimension(format!(
                "braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        Ok(())
    }
}

fn push_reduced(word: &mut Vec<Letter>, letter: Letter) {
    match word.last() {
        Some(&last) if last.cancels(letter) => {
            word.pop();
        }
        _ => word.push(letter),
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `n:word`, e.g. `4:s1 s3`.
impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<BraidWord> {
        let (n, word) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `n:word`, got `{s}`")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("strand count `{n}` is not an integer")))?;
        BraidWord::parse(word, n)
    }
}

/// `b_g = σ3 σ4 ⋯ σ_{2g+1}` in `B_{2g+2}`.
pub fn family_b(g: usize) -> Result<BraidWord> {
    if g < 1 {
        return Err(Error::Domain("the family b_g is defined for g >= 1".into()));
    }
    let letters = (3..=2 * g + 1).map(Letter::pos).collect();
    Ok(BraidWord::from_reduced_unchecked(2 * g + 2, letters))
}

/// `skew(b_g) · b_g = σ1 ⋯ σ_{2g-1} · σ3 ⋯ σ_{2g+1}`.
pub fn family_tilde(g: usize) -> Result<BraidWord> {
    Ok(family_b(g)?.tilde())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = w("s3", 4);
        assert_eq!(b.letters(), &[Letter::pos(3)]);
        assert_eq!(b.strands(), 4);
        assert!(w("", 6).is_empty());
        assert!(matches!(BraidWord::parse("s5", 4), Err(Error::Malformed(m)) if m.contains("s5")));
        assert!(matches!(BraidWord::parse("s0", 4), Err(Error::Malformed(_))));
        assert!(matches!(BraidWord::parse("sx", 4), Err(Error::Parse(_))));
        assert!(matches!(BraidWord::parse("t1", 4), Err(Error::Parse(_))));
    }

    #[test]
    fn parse_reduces_freely() {
        assert_eq!(w("s1 s2 S2 S1 s3", 4), w("s3", 4));
        assert_eq!(w("s1 S1", 2).len(), 0);
    }

    #[test]
    fn display_round_trip() {
        let b = w("s3 s4 S2", 6);
        assert_eq!(b.to_string(), "s3 s4 S2");
        assert_eq!("6:s3 s4 S2".parse::<BraidWord>().unwrap(), b);
    }

    #[test]
    fn skew_examples() {
        assert_eq!(w("s3", 4).skew(), w("s1", 4));
        assert_eq!(w("s1 s2 s3", 4).skew(), w("s1 s2 s3", 4));
        assert_eq!(w("s1 S2 s5", 6).skew(), w("s1 S4 s5", 6));
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(w("s3", 4).tilde(), w("s1 s3", 4));
        assert!(BraidWord::identity(5).tilde().is_empty());
        assert_eq!(family_tilde(2).unwrap(), w("s1 s2 s3 s3 s4 s5", 6));
    }

    #[test]
    fn palindromic_examples() {
        assert!(w("s1 s2 s3", 4).is_skew_palindromic());
        assert!(!w("s3", 4).is_skew_palindromic());
        // skew(s1 s2 s1) = s2 s1 s2 in B3: equal only at group level.
        let b = w("s1 s2 s1", 3);
        assert_ne!(b.skew(), b);
        assert!(b.is_skew_palindromic());
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_b(1).unwrap(), w("s3", 4));
        assert_eq!(family_b(2).unwrap(), w("s3 s4 s5", 6));
        assert_eq!(family_b(3).unwrap(), w("s3 s4 s5 s6 s7", 8));
        assert!(matches!(family_b(0), Err(Error::Domain(_))));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w("s3", 4).permutation().to_string(), "(3 4)");
        assert!(BraidWord::identity(5).permutation().is_identity());
        let p = w("s3 s4 s5", 6).permutation();
        assert_eq!(p.to_string(), "(3 4 5 6)");
        assert_eq!(p.cycle_count(), 3);
    }

    #[test]
    fn embed_examples() {
        let b = w("s1", 2).embed_for_plat().unwrap();
        assert_eq!(b, w("s1", 4));
        assert_eq!(BraidWord::identity(3).embed_for_plat().unwrap(), BraidWord::identity(6));
        assert!(BraidWord::identity(1).embed_for_plat().is_err());
    }

    #[test]
    fn concat_checks_strands() {
        assert!(matches!(w("s1", 3).concat(&w("s1", 4)), Err(Error::Dimension(_))));
        assert_eq!(w("s1 s2", 3).concat(&w("S2 s1", 3)).unwrap(), w("s1 s1", 3));
    }
}
