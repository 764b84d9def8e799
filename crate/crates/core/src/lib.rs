//! Left-invariant Riemannian geometry of the symmetric space `SL(3,C)/SU(3)`,
//! realized as the solvable group `S = NA`, and of its family of homogeneous
//! hypersurfaces `S_H = N exp(R H)`.
//!
//! Two independent routes compute the intrinsic curvature of each
//! hypersurface:
//!
//! * [`hypersurface`] works with 3x3 matrices and combines the
//!   symmetric-space curvature of the ambient space with the second
//!   fundamental form through the Gauss equation;
//! * [`engine`] takes structure constants and a Gram matrix and runs
//!   Koszul's formula for any metric Lie algebra.
//!
//! The CLI (`sl3c`) sweeps the family, runs the cross-checks and evaluates
//! user-supplied algebras.

// Tensor kernels index several arrays with the same loop variables.
#![allow(clippy::needless_range_loop)]

pub mod ambient;
pub mod cli;
pub mod engine;
pub mod error;
pub mod hypersurface;
pub mod linalg;

pub use engine::{CoefficientVector, DamekRicciReport, MetricLieAlgebra};
pub use error::{GeometryError, Result};
pub use hypersurface::{CurvatureReport, HypersurfaceModel, Regime, TangentVector};
pub use linalg::SquareComplexMatrix;
