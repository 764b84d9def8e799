//! Curvature engine for an arbitrary finite-dimensional real Lie algebra with
//! an inner product, i.e. a simply connected Lie group with a left-invariant
//! metric.
//!
//! The Levi-Civita connection on left-invariant fields comes from Koszul's
//! formula and is tabulated once at construction; curvature, sectional and
//! Ricci curvature are then bilinear contractions of that table.

mod algebra;
mod cheeger;
mod connection;
mod damek_ricci;
mod document;
mod vector;

pub use algebra::{from_matrix_basis, InnerProductKind, MetricLieAlgebra, CLOSURE_TOL, JACOBI_TOL};
pub use connection::OrthonormalFrame;
pub use damek_ricci::{AxiomResult, DamekRicciReport, DR_TOL};
pub use document::AlgebraDocument;
pub use vector::CoefficientVector;
