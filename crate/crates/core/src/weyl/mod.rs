//! The Weyl group W(D_n), its action on polynomials, the torus-level flag
//! bundle pushforward and the structure of the invariant ring.

mod group;
mod invariants;
mod pushforward;

pub use group::{
    act, enumerate_weyl_d, weyl_d_generators, weyl_d_iter, weyl_d_order, SignedPermutation,
    MAX_ENUMERATION_RANK,
};
pub use invariants::{
    decompose_invariant, elementary_symmetric, euler_monomial, is_invariant, random_invariant,
    squared_elementary,
};
pub use pushforward::{
    alternating_sum, eg_class_input, projection_class, pushforward_flag, pushforward_flag_with,
    type_d_vandermonde, PushforwardResult,
};

use thiserror::Error;

use crate::poly::MultiPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("rank {n} outside the supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("permutation is not a bijection")]
    NotABijection,
    #[error("signs must be +1 or -1")]
    BadSign,
    #[error("polynomial is not W(D_n)-invariant")]
    NotInvariant,
    #[error("internal invariant violated: symmetrized numerator not divisible by Delta (remainder {remainder})")]
    NonDivisible { remainder: Box<MultiPoly> },
    #[error("internal invariant violated: pushforward output is not W(D_n)-invariant")]
    InvariantViolation,
    #[error("internal invariant violated: decomposition does not reconstruct the input")]
    ReconstructionFailed,
}
