//! Exact computations around the Chow ring of the classifying space BSO(2n).
//!
//! - [`poly`]: sparse integer polynomials, a square-free product kernel and
//!   an expression parser.
//! - [`weyl`]: the Weyl group W(D_n), the torus-level flag bundle pushforward
//!   and the W(D_n)-invariant ring.
//! - [`weights`]: weight systems of SO(2n) representations, total Chern
//!   classes and three independent computations of the Euler coefficient
//!   `d_n` of `c_n(D_n^+)`.
//! - [`ring`]: normal forms in the presented Chow ring and the cohomology
//!   subring, the class map and torus restriction.
//! - [`verify`]: the per-rank verification suite used by the CLI.

pub mod exec;
pub mod poly;
pub mod ring;
pub mod verify;
pub mod weights;
pub mod weyl;

pub use exec::Execution;
