//! Exact arithmetic for fusion semirings whose simple objects need not be split.
//!
//! A [`FusionData`] records the fusion coefficients, the duality involution and
//! the per-simple endomorphism dimensions of a fusion category over a field that
//! is not algebraically closed. On top of that data the crate computes
//! Frobenius-Perron dimensions as certified real algebraic numbers, the regular
//! element, Drinfeld center predictions, Morita ratios and real Deligne-product
//! decompositions.

pub mod catalog;
pub mod deligne;
mod error;
pub mod format;
pub mod fpengine;
pub mod galois;
pub mod morphisms;
pub mod regular;
pub mod semiring;
pub mod validate;

pub use error::{FusionError, Result};
pub use fpengine::{AlgebraicNumber, FpEngine, FpOptions, RationalMatrix, RationalPolynomial};
pub use semiring::{Element, FusionData};
