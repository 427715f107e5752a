//! Exact combinatorics of affine Weyl groups in positive characteristic:
//! alcove geometry under the dot action, Kazhdan-Lusztig polynomials,
//! the Lusztig character formula, Levi truncation of formal characters
//! and partition criteria for types A and C.
//!
//! Everything is exact: weights are integer vectors in fundamental-weight
//! coordinates, multiplicities and polynomial coefficients are big integers.

pub mod affine;
pub mod charring;
pub mod error;
pub mod klpoly;
pub mod levi;
pub mod rootsys;
pub mod typea;
pub mod weight;

pub use affine::{AffineElement, AffineWeylGroup, Alcove, Generator};
pub use charring::{DeltaVector, FormalCharacter};
pub use error::{Error, Result};
pub use klpoly::{KlTable, LaurentPoly};
pub use levi::LeviDatum;
pub use rootsys::{CartanType, RootSystem, WeylElement};
pub use typea::Partition;
pub use weight::Weight;
