//! The twist homomorphism `σ_i ↦ t_i`, its action on homology and the
//! homological dilatations of the family `tilde(b_g)`.

mod burau;
mod scan;
mod spectral;
mod symplectic;
mod torus;
mod twist;

pub use burau::{burau_at, burau_generator, burau_reduced};
pub use scan::{scaling_scan, scaling_scan_with, ScalingReport, ScalingRow, ScanMetadata, ScanOptions};
pub use spectral::{spectral_radius, SpectralRadius, SPECTRAL_REL_TOL};
pub use symplectic::{chain_class, is_symplectic, symplectic_action, symplectic_form};
pub use torus::mapping_torus_homology;
pub use twist::{twist_word, TwistWord};

use crate::algebra::charpoly;
use crate::braid::BraidWord;
use crate::Result;

/// Certified spectral radius of the reduced Burau matrix at `t = -1`.
pub fn homological_dilatation_certified(beta: &BraidWord) -> Result<SpectralRadius> {
    if beta.strands() < 2 {
        return Ok(SpectralRadius { value: 1.0, lower: 1.0, upper: 1.0, periodic: true });
    }
    let m = burau_at(beta, -1)?;
    spectral_radius(&charpoly(&m)?)
}

/// `max(1, ρ)` for `ρ` the spectral radius of the reduced Burau matrix at
/// `t = -1`: a lower bound for the dilatation of `beta`.
pub fn homological_dilatation(beta: &BraidWord) -> Result<f64> {
    Ok(homological_dilatation_certified(beta)?.value.max(1.0))
}
