//! The presented Chow ring `CH*(BSO(2n))`, the subring of integral
//! cohomology it maps onto, and the maps between them and the torus.

mod elements;
mod maps;
mod presentation;

pub use elements::{ChowElement, ChowRing, CohElement, CohRing};
pub use maps::{
    class_map, class_map_raw, express_in_generators, target_ring, theorem3_report,
    torus_restriction, Theorem3Report, MAX_THEOREM3_RANK,
};
pub use presentation::E2Sign;

use thiserror::Error;

use crate::poly::{ParseError, PolyError};
use crate::weyl::WeylError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("rank {n} outside the supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },
    #[error("polynomial has {found} variables, the ring has {expected}")]
    WrongSpace { expected: usize, found: usize },
    #[error("no generator c{i} for n = {n}")]
    NoSuchGenerator { i: usize, n: usize },
    #[error("elements of rings of rank {left} and {right} cannot be combined")]
    RankMismatch { left: usize, right: usize },
    #[error("halving is only supported for elements of a single weighted degree")]
    NonDiagonalDoubling,
    #[error("torus restriction of the result does not reproduce the input")]
    RestrictionMismatch,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}
