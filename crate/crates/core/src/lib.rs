//! Weight combinatorics, atypicality data and closed-form cohomology
//! classifiers for the Lie superalgebras sl(m|n) and C(n) = osp(2|2n-2).
//!
//! Everything is exact: weights carry rational coordinates and the matrix
//! realizations use rational entries.

pub mod algebra;
pub mod atypicality;
pub mod classifier;
pub mod error;
pub mod families;
pub mod kappa;
pub mod linalg;
pub mod osp;
pub mod pwgraph;
pub mod special;
pub mod weight;

pub use algebra::{AlgebraSpec, BasisElement, BasisKind, Family, Root, RootSystem};
pub use error::{Error, Result};
pub use weight::Weight;

/// Exact rational scalar used for weights and structure constants.
pub type Rat = num_rational::Rational64;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}
