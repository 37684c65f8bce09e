//! Exact arithmetic for skew-polynomial rings over finite fields, and the
//! code constructions built on top of them: skew constacyclic block codes,
//! skew Reed-Solomon codes, and left ideal convolutional codes, each with a
//! closed-form dual generator that is cross-checked against plain linear
//! algebra.
//!
//! The crate is `no_std` (it allocates, but never touches the OS), so the
//! whole algebra layer can be reused from embedded or wasm hosts. Everything
//! is exact: elements of GF(q) are table-backed integers, polynomial and
//! matrix entries are exact field elements, and every "check" routine
//! compares canonical forms instead of floating-point residuals.
//!
//! Module map:
//!
//! * [`gf`] — finite fields GF(p^m), Frobenius automorphisms, subfield
//!   bases (dual / normal / self-dual), Hilbert 90 solutions.
//! * [`skewpoly`] — univariate skew polynomials with the full Euclidean
//!   toolkit (two-sided division, gcrd/gcld, lclm/lcrm, norms, right
//!   evaluation).
//! * [`linalg`] — dense matrices over GF(q) and over GF(q)[z]: RREF,
//!   nullspaces, Hermite and Smith normal forms, polynomial left kernels.
//! * [`framework`] — the shared transposition machinery: multiplication
//!   matrices of ring elements, the anti-isomorphism check
//!   `M(theta(f)) = M(f)^T`, and dual-code extraction from an annihilator
//!   certificate.
//! * [`constacyclic`] — quotient rings L[x;sigma]/(x^n - u) and the dual of
//!   a skew constacyclic code via the coefficient-reversing anti-map.
//! * [`skewrs`] — skew Reed-Solomon codes from a normal element: generator
//!   as an lclm of twisted linear factors, closed-form dual, evaluation
//!   form, exhaustive minimum distance.
//! * [`convolutional`] — left ideal convolutional codes over matrix rings
//!   M_n(K), with ring automorphisms, expansion to base-field matrices, and
//!   duals of idempotent-generated codes.
//! * [`verify`] — seeded, self-contained verification suites that re-derive
//!   every closed form in the crate against an independent oracle.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod constacyclic;
pub mod convolutional;
pub mod framework;
pub mod gf;
pub mod linalg;
pub mod skewpoly;
pub mod skewrs;
pub mod verify;

pub use constacyclic::{ConstaDual, ConstaRing};
pub use convolutional::{ConvElt, ConvRing, IdempotentDual};
pub use framework::{CheckReport, DualPair, LinearCode};
pub use gf::{Felt, Field, FieldAut, SubfieldBasis};
pub use linalg::{Mat, Poly, PolyMat};
pub use skewpoly::{Convention, Side, SkewPoly};
pub use skewrs::SkewRsCode;
pub use verify::{run_all, run_suite, SuiteReport, SUITE_NAMES};
