use super::symplectic::symplectic_action;
use crate::algebra::{AbelianGroupPresentation, IntMatrix};
use crate::braid::BraidWord;
use crate::Result;

/// `H_1(T_φ) = Z ⊕ coker(A - I)` for `A` the action of `φ` on `H_1(Σ_g)`.
pub fn mapping_torus_homology(beta: &BraidWord) -> Result<AbelianGroupPresentation> {
    let a = symplectic_action(beta)?;
    let n = a.rows();
    let rel = a.sub(&IntMatrix::identity(n))?;
    Ok(AbelianGroupPresentation::direct_sum(&[
        AbelianGroupPresentation::free(1),
        AbelianGroupPresentation::new(rel),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::family_tilde;

    #[test]
    fn product_with_circle() {
        for g in 1..=4 {
            let h = mapping_torus_homology(&BraidWord::identity(2 * g + 2)).unwrap();
            assert_eq!(h.rank(), 2 * g + 1);
            assert!(h.torsion().is_empty());
        }
    }

    #[test]
    fn family() {
        let h = |g| mapping_torus_homology(&family_tilde(g).unwrap()).unwrap().to_string();
        assert_eq!(h(1), "Z^2 + Z/2");
        assert_eq!(h(2), "Z + Z/5");
        assert_eq!(h(3), "Z + Z/2 + Z/6");
    }
}
