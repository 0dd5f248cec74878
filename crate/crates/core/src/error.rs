use alloc::string::String;

use crate::toric::ParseError;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators are not coprime (gcd = {0})")]
    NotCoprime(u64),
    #[error("{0} is not an element of the semigroup")]
    NotMember(i64),
    #[error("ideal is not contained in the semigroup ring")]
    NotIntegral,
    #[error("value set is not closed under adding semigroup elements")]
    NotModule,
    #[error("ideal is not primary to the maximal ideal")]
    NotPrimary,
    #[error("fractional ideal must have minimum 0 (found {0})")]
    NotNormalized(i64),
    #[error("semigroup is not contained in the proposed oversemigroup")]
    NotSubsemigroup,
    #[error("the semigroup is ℕ (regular ring)")]
    RegularRing,
    #[error("Hilbert function did not stabilize within {0} steps")]
    NonStabilized(usize),
    #[error("ring is not 2-almost Gorenstein")]
    NotTwoAgl,
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(&'static str),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("matrix shape mismatch at row {row}, column {col}: {reason}")]
    ShapeMismatch {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("ring weights {weights:?} do not match the semigroup generators {generators:?}")]
    RingMismatch {
        weights: alloc::vec::Vec<u64>,
        generators: alloc::vec::Vec<i64>,
    },
}
