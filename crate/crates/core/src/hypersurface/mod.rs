//! The hypersurfaces `S_H = N exp(R H)` of the solvable model of
//! `SL(3,C)/SU(3)`, with `H = cos(a) H0 + sin(a) H1` for `a` in `[0, pi/2]`.
//!
//! Everything here works directly with 3x3 matrices: extrinsic geometry via
//! the unit normal `T_H = sin(a) H0 - cos(a) H1`, intrinsic curvature via the
//! Gauss equation over the symmetric-space curvature of the ambient space.
//! [`build_hypersurface_algebra`] hands the same hypersurface to the generic
//! engine so the two routes can be compared.

mod extrinsic;
mod foliation;
mod report;
mod ricci;
mod scan;
mod tangent;

use std::f64::consts::FRAC_PI_2;

use crate::ambient::{h0, h1, times_i, v, w, z0};
use crate::engine::{from_matrix_basis, InnerProductKind, MetricLieAlgebra};
use crate::error::{GeometryError, Result};
use crate::linalg::SquareComplexMatrix;

pub use extrinsic::{ambient_curvature, mean_curvature_closed_form};
pub use foliation::{
    flow_point, foliation_residual, leaf_conjugate, volume_distortion, GroupElement,
};
pub use report::{
    classify, classify_with, CurvatureReport, Regime, BOUNDARY_TOL, DEFAULT_SAMPLES, DEFAULT_SEED,
};
pub use ricci::{ricci_closed, ricci_extremes, UNIT_TOL};
pub use scan::{
    k_sigma_closed_form, nonpositivity_scan, random_plane, random_unit_tangent, sigma_plane,
    zero_curvature_search, PlaneScan, ZeroPlaneSearch,
};
pub use tangent::TangentVector;

/// Basis labels of the tangent algebra `s_H`, in coordinate order.
pub const TANGENT_LABELS: [&str; 7] = ["V", "iV", "W", "iW", "Z0", "iZ0", "H"];

/// Returns `alpha` if it lies in `[0, pi/2]`.
pub fn check_alpha(alpha: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(GeometryError::AngleOutOfRange(alpha));
    }
    Ok(alpha)
}

/// One member of the hypersurface family.
#[derive(Debug, Clone)]
pub struct HypersurfaceModel {
    alpha: f64,
    h: SquareComplexMatrix,
    normal: SquareComplexMatrix,
    basis: Vec<SquareComplexMatrix>,
}

impl HypersurfaceModel {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        let (s, c) = alpha.sin_cos();
        let h = &h0().scale(c) + &h1().scale(s);
        let normal = &h0().scale(s) - &h1().scale(c);
        let basis = vec![
            v(),
            times_i(&v()),
            w(),
            times_i(&w()),
            z0(),
            times_i(&z0()),
            h.clone(),
        ];
        Ok(Self {
            alpha,
            h,
            normal,
            basis,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `H = cos(a) H0 + sin(a) H1`.
    pub fn h(&self) -> &SquareComplexMatrix {
        &self.h
    }

    /// The unit normal `T_H = sin(a) H0 - cos(a) H1`.
    pub fn normal(&self) -> &SquareComplexMatrix {
        &self.normal
    }

    /// `(V, iV, W, iW, Z0, iZ0, H)`.
    pub fn basis(&self) -> &[SquareComplexMatrix] {
        &self.basis
    }

    /// The matrix `aV + bW + cZ0 + tH`.
    pub fn tangent_matrix(&self, x: &TangentVector) -> SquareComplexMatrix {
        crate::ambient::combine(&self.basis, &x.coords())
    }
}

/// The 7-dimensional metric algebra `s_H` handed to the generic engine.
pub fn build_hypersurface_algebra(alpha: f64) -> Result<MetricLieAlgebra> {
    let model = HypersurfaceModel::new(alpha)?;
    from_matrix_basis(model.basis(), InnerProductKind::Solvable)?
        .with_labels(TANGENT_LABELS.iter().map(|s| s.to_string()).collect())
}

/// The 8-dimensional metric algebra `s` of the symmetric space itself.
pub fn build_ambient_algebra() -> Result<MetricLieAlgebra> {
    let model = crate::ambient::AmbientModel::new();
    from_matrix_basis(model.basis(), InnerProductKind::Solvable)?
        .with_labels(model.labels().to_vec())
}
