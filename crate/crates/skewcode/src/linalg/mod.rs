//! Exact linear algebra over GF(q) and over the commutative polynomial ring
//! GF(q)[z].
//!
//! Three types:
//!
//! * [`Poly`] — plain (untwisted) univariate polynomials. Deliberately
//!   independent of [`crate::skewpoly`]: when the automorphism is the
//!   identity the two implementations must agree, and keeping separate code
//!   paths makes that a meaningful cross-check instead of a tautology.
//! * [`Mat`] — dense matrices over GF(q): RREF, rank, nullspace, inverse,
//!   Kronecker products.
//! * [`PolyMat`] — dense matrices over GF(q)[z]: row Hermite normal form
//!   (with the unimodular transform), Smith normal form invariant factors,
//!   and saturated left kernels.
//!
//! Row convention throughout: codewords are row vectors, generators are
//! stacked as rows, and row modules are compared by canonical forms (RREF
//! over the field, row HNF over the polynomial ring) — never by ad hoc
//! membership sampling.

mod mat;
mod poly;
mod polymat;

pub use mat::{Mat, Rref};
pub use poly::Poly;
pub use polymat::PolyMat;

/// Errors from exact linear algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinalgError {
    /// Polynomial division by zero.
    DivisionByZero,
}

impl core::fmt::Display for LinalgError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LinalgError::DivisionByZero => write!(f, "division by the zero polynomial"),
        }
    }
}

impl core::error::Error for LinalgError {}
