//! Weight systems of SO(2n) representations restricted to the maximal torus,
//! and the Euler coefficient of `c_n(D_n^+)`.

mod euler;
mod system;

pub use euler::{
    euler_coefficient_closed, euler_coefficient_kutin, euler_coefficient_kutin_with,
    euler_coefficient_product, euler_coefficient_product_sparse, euler_coefficient_product_with,
    kutin_chosen_factor, kutin_g, kutin_pairing_audit, kutin_unpaired_factors, MAX_PRODUCT_RANK,
};
pub use system::{
    linear_factor, weights_dplus_extreme, weights_lambda, weights_standard, WeightLabel,
    WeightSystem,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("rank {n} outside the supported range {min}..={max}")]
    RankOutOfRange { n: usize, min: usize, max: usize },
    #[error("exterior degree {k} outside 0..={max}")]
    ExteriorDegreeOutOfRange { k: usize, max: usize },
    #[error("weight vector has length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("stage {i} outside 1..n-1 for n = {n}")]
    StageOutOfRange { n: usize, i: usize },
}
