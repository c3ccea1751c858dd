use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::{Error, Result, Sign};

/// A word in the chain twists `t_1, ..., t_{2g+1}` on the closed surface of
/// genus `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistWord {
    genus: usize,
    letters: Vec<(usize, Sign)>,
}

impl TwistWord {
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `(curve index, sign)`, indices 1-based.
    pub fn letters(&self) -> &[(usize, Sign)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Genus of the hyperelliptic surface attached to `B_{2g+2}`.
pub(crate) fn genus_of(strands: usize) -> Result<usize> {
    if strands < 4 || strands % 2 != 0 {
        return Err(Error::Domain(format!(
            "the twist homomorphism needs 2g+2 strands with g >= 1, got {strands}"
        )));
    }
    Ok((strands - 2) / 2)
}

/// Sends `σ_i^{±1}` to `t_i^{±1}`.
pub fn twist_word(beta: &BraidWord) -> Result<TwistWord> {
    let genus = genus_of(beta.strands())?;
    let letters = beta.letters().iter().map(|l| (l.index, l.sign)).collect();
    Ok(TwistWord { genus, letters })
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &(i, s)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match s {
                Sign::Pos => write!(f, "t{i}")?,
                Sign::Neg => write!(f, "T{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for TwistWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
