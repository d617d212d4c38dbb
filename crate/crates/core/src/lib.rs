//! Exact root-system combinatorics for the anti-canonical bundle on
//! Bott-Samelson-Demazure-Hansen varieties.
//!
//! * [`rootsys`] builds root systems of types A to G with Humphreys numbering.
//! * [`weyl`] handles words, reduced expressions, commutation classes,
//!   Coxeter and minuscule elements.
//! * [`bsdh`] computes Picard coordinates of `K^{-1}`, positivity flags,
//!   Demazure-operator characters and the Coxeter/minuscule decision procedures.
//! * [`verify`] runs the brute-force verification suites.

pub mod bsdh;
pub mod error;
pub mod rootsys;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{DynkinType, Family, RootSystem, RootVector, Weight};
pub use weyl::{WeylElement, Word};
