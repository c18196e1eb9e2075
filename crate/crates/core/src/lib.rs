//! Exact verification of centralizers of `sl(2)` on three-fold tensor
//! products `[2j1] ⊗ [2j2] ⊗ [2j3]` as quotients of the Racah algebra.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: rational scalars and dense linear algebra, generic over
//!   [`exact::Scalar`];
//! * [`su2rep`]: spin representations and intermediate Casimirs;
//! * [`bratteli`]: Clebsch–Gordan data and centralizer dimensions;
//! * [`ncalg`]: finitely presented algebras, truncated dimension bounds and
//!   closure certificates;
//! * [`racah`]: the quotiented Racah presentations and the verification
//!   pipeline;
//! * [`diagalg`]: Brauer and Temperley–Lieb diagrams and the boundary
//!   algebras, with their isomorphisms to the Racah quotients.

pub mod bratteli;
pub mod diagalg;
mod error;
pub mod exact;
pub mod ncalg;
pub mod racah;
pub mod su2rep;

pub use error::{Error, Result};
pub use exact::Rational;
pub use su2rep::Spin;

/// Exact rational matrix.
pub type QMatrix = exact::Matrix<Rational>;
/// Exact block-diagonal rational matrix.
pub type QBlockMatrix = exact::BlockMatrix<Rational>;
/// Floating-point matrix, for numerical experiments only.
pub type FMatrix = exact::Matrix<f64>;
/// Single-precision matrix.
pub type F32Matrix = exact::Matrix<f32>;
