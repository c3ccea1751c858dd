//! Exact arithmetic: integer and Laurent polynomials, integer matrices,
//! Smith normal form, characteristic polynomials.

mod abelian;
mod charpoly;
pub mod cyclotomic;
mod laurent;
mod matrix;
pub mod modp;
mod poly;
pub mod sturm;

pub use abelian::AbelianGroupPresentation;
pub use charpoly::{charpoly, charpoly_mod};
pub use laurent::{LaurentMatrix, LaurentPoly};
pub use matrix::{det_poly, IntMatrix};
pub(crate) use matrix::{serialize_bigint, serialize_bigint_vec};
pub use poly::Poly;
