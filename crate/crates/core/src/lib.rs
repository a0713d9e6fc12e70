//! Exact arithmetic for type B quasisymmetric functions.
//!
//! The index space is the set of *pseudo-compositions*: ordered tuples of
//! nonnegative integers whose first part may be zero. Three bases are carried
//! on it, the monomial `M`, the fundamental `F`, and the peak `K`, and the
//! library implements the full Hopf package on the resulting graded algebra:
//! the quasi-shuffle product and its fundamental-basis shuffle counterpart,
//! the deconcatenation coproducts (type A, type B binomial, and Chow's
//! module-coalgebra variant), closed-form and recursion-derived antipodes,
//! and the theta projections onto the peak spans.
//!
//! Ordinary (type A) quasisymmetric functions are the first-part-zero
//! subalgebra; their indices embed as 0-prefixed pseudo-compositions.
//!
//! Every identity the library claims is checkable against an independent
//! ground truth: [`oracle`] expands elements as honest truncated polynomials
//! in concrete variables and realizes products and coproducts as polynomial
//! identities, and [`oracle::verify`] packages those sweeps as a report. The
//! `bqsym` binary exposes the whole surface on the command line.
//!
//! Coefficients are unbounded integers throughout; nothing in the crate
//! touches floating point.

pub mod compositions;
pub mod error;
pub mod expr;
pub mod json;
mod linalg;
pub mod oracle;
pub mod peak;
pub mod permutations;
pub mod qsym;

pub use compositions::{Composition, DescentSet, PseudoComposition};
pub use error::{Error, Result};
pub use permutations::SignedPermutation;
pub use qsym::{Basis, BasisIndex, QSymElement, TensorElement};
