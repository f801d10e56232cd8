//! Exact sparse multivariate polynomials over the integers.

mod alphabet;
mod linear_forms;
mod monomial;
mod multilinear;
mod multipoly;
mod parse;

pub use alphabet::Alphabet;
pub use linear_forms::product_of_linear_forms;
pub use monomial::Monomial;
pub use multilinear::{MultilinearProduct, MAX_MULTILINEAR_VARS};
pub use multipoly::MultiPoly;
pub use parse::{parse_poly, parse_with, ParseError, MAX_EXPONENT};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not exactly divisible; remainder {remainder}")]
    NotDivisible { remainder: Box<MultiPoly> },
}
