//! The normal flow `phi^s(q) = q exp(s T_H)` and the leaf identification
//! `q exp(s T_H) = exp(s T_H) q'` that makes every leaf an isometric copy of
//! `S_H`.

use num_complex::Complex64;
use serde::Serialize;

use super::HypersurfaceModel;
use crate::error::Result;
use crate::linalg::SquareComplexMatrix;

/// The element `n(x, y, z) exp(t H + s T_H)` of `S = NA`, where
/// `n(x, y, z)` is unipotent upper triangular with `x` at (1,2), `y` at (2,3)
/// and `z` at (1,3). Elements of `S_H` itself have `s = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroupElement {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    pub t: f64,
    pub s: f64,
    pub alpha: f64,
}

impl GroupElement {
    pub fn identity(alpha: f64) -> Self {
        Self::on_leaf(
            alpha,
            Complex64::default(),
            Complex64::default(),
            Complex64::default(),
            0.0,
        )
    }

    /// A point of `S_H`.
    pub fn on_leaf(alpha: f64, x: Complex64, y: Complex64, z: Complex64, t: f64) -> Self {
        Self {
            x,
            y,
            z,
            t,
            s: 0.0,
            alpha,
        }
    }

    pub fn is_finite(&self) -> bool {
        [
            self.x.re, self.x.im, self.y.re, self.y.im, self.z.re, self.z.im, self.t, self.s,
            self.alpha,
        ]
        .iter()
        .all(|v| v.is_finite())
    }

    pub fn to_matrix(&self) -> Result<SquareComplexMatrix> {
        let model = HypersurfaceModel::new(self.alpha)?;
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::default();
        let n = SquareComplexMatrix::from_rows(&[
            vec![one, self.x, self.z],
            vec![zero, one, self.y],
            vec![zero, zero, one],
        ])?;
        let diag = diagonal_exp(&[(model.h(), self.t), (model.normal(), self.s)]);
        Ok(&n * &diag)
    }
}

/// `exp(sum_k c_k D_k)` for diagonal `D_k`, computed entrywise.
fn diagonal_exp(terms: &[(&SquareComplexMatrix, f64)]) -> SquareComplexMatrix {
    let dim = terms[0].0.dim();
    let exps: Vec<f64> = (0..dim)
        .map(|i| {
            terms
                .iter()
                .map(|(d, c)| c * d[(i, i)].re)
                .sum::<f64>()
                .exp()
        })
        .collect();
    SquareComplexMatrix::from_real_diagonal(&exps)
}

/// `exp(s T_H)` as a diagonal matrix.
pub fn normal_exp(alpha: f64, s: f64) -> Result<SquareComplexMatrix> {
    let model = HypersurfaceModel::new(alpha)?;
    Ok(diagonal_exp(&[(model.normal(), s)]))
}

/// `q exp(s T_H)`.
pub fn flow_point(q: &GroupElement, s: f64) -> GroupElement {
    GroupElement { s: q.s + s, ..*q }
}

/// The point `q'` with `exp(s T_H) q' = q exp(s T_H)`:
/// `x' = e^{tau2 - tau1} x`, `y' = e^{tau3 - tau2} y`, `z' = e^{tau3 - tau1} z`
/// where `exp(s T_H) = diag(e^{tau1}, e^{tau2}, e^{tau3})`.
pub fn leaf_conjugate(q: &GroupElement, s: f64) -> Result<GroupElement> {
    let model = HypersurfaceModel::new(q.alpha)?;
    let tau: Vec<f64> = (0..3).map(|i| s * model.normal()[(i, i)].re).collect();
    Ok(GroupElement {
        x: q.x * (tau[1] - tau[0]).exp(),
        y: q.y * (tau[2] - tau[1]).exp(),
        z: q.z * (tau[2] - tau[0]).exp(),
        ..*q
    })
}

/// Largest entry of `exp(s T_H) q' - q exp(s T_H)`.
pub fn foliation_residual(q: &GroupElement, s: f64) -> Result<f64> {
    let e = normal_exp(q.alpha, s)?;
    let qp = leaf_conjugate(q, s)?;
    let lhs = &e * &qp.to_matrix()?;
    let rhs = &q.to_matrix()? * &e;
    Ok((&lhs - &rhs).max_abs())
}

/// Jacobian of the flow, `e^{s M(a)} = e^{-4 s sin(a)}`.
pub fn volume_distortion(alpha: f64, s: f64) -> f64 {
    (s * super::mean_curvature_closed_form(alpha)).exp()
}
