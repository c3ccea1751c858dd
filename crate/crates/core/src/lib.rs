//! Braid-theoretic constructions for circular plat closures and the
//! hyperelliptic monodromies they induce.
//!
//! The crate is organised in four layers:
//!
//! - [`braid`]: braid words, the skew involution, skew-palindromic doubling
//!   and the family `b_g = s3 s4 ... s_{2g+1}`.
//! - [`diagram`]: planar diagrams (PD codes) of standard and circular plat
//!   closures, Reidemeister simplification and unknot certificates.
//! - [`invariants`]: Alexander polynomial, determinant, Goeritz presentation
//!   of the double branched cover and the Kauffman bracket.
//! - [`dynamics`]: Dehn-twist words, reduced Burau and symplectic actions,
//!   certified spectral radii and the genus scan.
//!
//! [`algebra`] holds the exact integer polynomial and matrix machinery the
//! other modules share.

pub mod algebra;
pub mod braid;
pub mod diagram;
pub mod dynamics;
mod error;
pub mod invariants;
pub mod sample;

pub use error::{Error, Result};

/// Schema tag embedded in every machine-readable report.
pub const SCHEMA_VERSION: &str = "platforge/1";

/// Sign of a braid letter or of a link crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}
