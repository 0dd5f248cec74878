//! Invariants of one-dimensional numerical semigroup rings `k[[t^s : s ∈ S]]`.
//!
//! Everything here works at the level of value sets: a monomial fractional
//! ideal is represented by the set of `t`-adic valuations of its elements, and
//! lengths of quotients become cardinalities of set differences. On top of
//! that arithmetic the crate provides
//!
//! * [`semigroup`]: membership, Apéry sets, Frobenius and pseudo-Frobenius
//!   numbers, type, symmetry;
//! * [`valueideal`]: canonical ideal, products, colons, conductor, colengths,
//!   minimal generators;
//! * [`classify`]: Hilbert coefficients of the canonical ideal, Sally-module
//!   rank, the `K/R` decomposition and the Gorenstein / almost Gorenstein /
//!   2-almost Gorenstein label;
//! * [`ulrich`]: certification and enumeration of monomial Ulrich ideals and
//!   the structural checks that go with them;
//! * [`toric`]: the defining ideal of the monomial curve computed by exact
//!   degreewise linear algebra, and verification of determinantal
//!   presentation matrices.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
mod error;
pub mod semigroup;
pub mod toric;
pub mod ulrich;
pub mod valueideal;

pub use classify::{ClassLabel, ClassificationReport, HilbertData, KModRDecomposition};
pub use error::{Error, Result};
pub use semigroup::NumericalSemigroup;
pub use ulrich::UlrichCertificate;
pub use valueideal::ValueIdeal;
