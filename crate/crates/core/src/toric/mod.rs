//! Toric ideals of monomial curves and their determinantal presentations.
//!
//! `φ : ℤ[X₁, …, Xₙ] → k[[t]]`, `Xᵢ ↦ t^{aᵢ}`, where the `aᵢ` are the semigroup
//! generators. The weighted polynomial ring stands in for the power series
//! ring: the kernel is generated by weighted-homogeneous polynomials, so all
//! generation questions can be settled degree by degree.

mod kernel;
mod linalg;
mod matrix;
mod poly;

pub use kernel::{
    ideal_equal_to_kernel, kernel_dimension, minimal_kernel_generators, span_dimension,
    KernelGenerators, KernelVerdict,
};
pub use linalg::{exact_rank, EchelonBasis, SparseRow};
pub use matrix::{check_ring, check_determinantal_shape, minors_2x2, Blocks, JFailure, PolyMatrix, ShapeReport};
pub use poly::{DisplayPoly, Exponents, ParseError, WeightedPolyRing, WeightedPolynomial};

use crate::semigroup::NumericalSemigroup;

/// Default degree bound `2·(F + 1 + 2·max weight)`.
pub fn default_degree_bound(s: &NumericalSemigroup) -> u64 {
    let max = s.generators().iter().copied().max().unwrap_or(1);
    (2 * (s.frobenius() + 1 + 2 * max)).max(1) as u64
}
