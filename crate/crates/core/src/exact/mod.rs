//! Exact scalars and dense linear algebra.
//!
//! Everything is generic over [`Scalar`]; the verification pipeline uses
//! [`Rational`] throughout so that every rank, kernel and dimension is exact.

mod algebra;
mod echelon;
mod matrix;
mod modp;
mod scalar;
mod sparse;

pub use algebra::{
    eval_poly, eval_root_product, minimal_polynomial, poly_from_roots, poly_value, span_closure, span_dim, split_over,
    AlgebraElement,
};
pub use echelon::Echelon;
pub use matrix::{kron, mat_rank, BlockMatrix, Matrix};
pub use modp::{Fp, MODULUS};
pub use scalar::{fmt_rational, parse_rational, q, qi, serde_rational, Rational, Scalar};
pub use sparse::{axpy, SparseRref, SparseVec};
