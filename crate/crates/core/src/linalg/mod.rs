//! Exact linear algebra over Q: everything downstream is decided by the
//! ranks and kernels computed here.

pub mod canonical;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use canonical::{char_poly, invariant_factors, min_poly, rational_canonical_form};
pub use matrix::{RationalMatrix, Rref};
pub use poly::RationalPolynomial;
pub use rational::Rational;

use crate::error::Result;

/// Rank and a kernel basis (column vectors, reduced-echelon normalized).
pub fn rank_kernel(m: &RationalMatrix) -> (usize, Vec<RationalMatrix>) {
    m.rank_kernel()
}

pub fn squarefree_part(p: &RationalPolynomial) -> Result<RationalPolynomial> {
    p.squarefree_part()
}
