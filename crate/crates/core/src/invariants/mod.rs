//! Link invariants computed exactly from PD diagrams.

mod alexander;
mod goeritz;
mod kauffman;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use crate::algebra::{AbelianGroupPresentation, LaurentPoly};
pub use alexander::{alexander, alexander_determinant, alexander_polynomial, Alexander};
pub use goeritz::{double_cover_homology, goeritz_determinant, goeritz_matrix};
pub use kauffman::{kauffman_bracket, normalized_bracket, BRACKET_MAX_CROSSINGS};

use crate::algebra::{serialize_bigint, serialize_bigint_vec};
use crate::diagram::{certify_unknot, LinkDiagram, UnknotCertificate};
use crate::{Error, Result};

/// `|Δ(-1)|`, checked against the Goeritz determinant.
pub fn determinant(d: &LinkDiagram) -> Result<BigInt> {
    let a = alexander_determinant(d)?;
    let g = goeritz_determinant(d)?;
    if a != g {
        return Err(Error::Internal(format!(
            "determinant mismatch: Alexander gives {a}, Goeritz gives {g}"
        )));
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReportOptions {
    /// Simplifier budget for an unknot certificate; `None` skips it.
    pub certify_budget: Option<usize>,
    pub bracket: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub schema: &'static str,
    pub components: usize,
    pub crossings: usize,
    pub alexander: String,
    pub split: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub determinant: BigInt,
    /// Invariant factors other than 1; `0` stands for a `Z` summand.
    #[serde(serialize_with = "serialize_bigint_vec")]
    pub double_cover_h1: Vec<BigInt>,
    pub double_cover_group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unknot_certificate: Option<UnknotCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bracket: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized_bracket: Option<String>,
}

pub fn invariant_report(d: &LinkDiagram, opts: ReportOptions) -> Result<InvariantReport> {
    let alex = alexander(d)?;
    let det = alex.polynomial.eval_int(-1)?.magnitude().clone().into();
    let h1 = double_cover_homology(d)?;
    check_two_paths(&det, &h1)?;
    let unknot_certificate = match opts.certify_budget {
        Some(budget) => Some(certify_unknot(d, budget)?),
        None => None,
    };
    let (bracket, normalized) = if opts.bracket {
        (
            Some(kauffman_bracket(d)?.display_with("A")),
            Some(normalized_bracket(d)?.display_with("A")),
        )
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        schema: crate::SCHEMA_VERSION,
        components: d.component_count(),
        crossings: d.crossing_count(),
        alexander: alex.polynomial.to_string(),
        split: alex.split,
        determinant: det,
        double_cover_h1: h1.nontrivial_factors(),
        double_cover_group: h1.to_string(),
        unknot_certificate,
        bracket,
        normalized_bracket: normalized,
    })
}

/// `|Δ(-1)|` must equal the order of `H_1` of the double cover, with 0
/// standing for an infinite group.
fn check_two_paths(det: &BigInt, h1: &AbelianGroupPresentation) -> Result<()> {
    let order = h1.order().unwrap_or_else(BigInt::zero);
    if &order != det {
        return Err(Error::Internal(format!(
            "determinant {det} disagrees with |H_1| = {order} of the double cover ({h1})"
        )));
    }
    debug_assert!(!h1.is_trivial() || det.is_one());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{family_b, BraidWord};
    use crate::diagram::{circular_plat_diagram, closure_diagram, DEFAULT_BUDGET};

    #[test]
    fn trefoil_report() {
        let d = closure_diagram(&BraidWord::parse("s1 s1 s1", 2).unwrap());
        let r = invariant_report(&d, ReportOptions { certify_budget: None, bracket: true }).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["determinant"], 3);
        assert_eq!(json["double_cover_h1"], serde_json::json!([3]));
        assert_eq!(json["alexander"], "t^2 - t + 1");
        assert!(json.get("unknot_certificate").is_none());
        assert!(json["normalized_bracket"].is_string());
    }

    #[test]
    fn plat_unknot_report() {
        let d = circular_plat_diagram(&family_b(1).unwrap()).unwrap();
        let opts = ReportOptions { certify_budget: Some(DEFAULT_BUDGET), bracket: false };
        let json = serde_json::to_value(invariant_report(&d, opts).unwrap()).unwrap();
        assert_eq!(json["determinant"], 1);
        assert_eq!(json["double_cover_h1"], serde_json::json!([]));
        assert_eq!(json["unknot_certificate"], "certified_unknot");
    }

    #[test]
    fn determinant_paths_agree() {
        for (w, n, expect) in [("s1 s1 s1", 2, 3), ("s1 S2 s1 S2", 3, 5), ("", 2, 0), ("s1 s1", 2, 2)] {
            let d = closure_diagram(&BraidWord::parse(w, n).unwrap());
            assert_eq!(determinant(&d).unwrap(), BigInt::from(expect));
        }
    }
}
