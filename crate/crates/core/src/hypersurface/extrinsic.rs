use nalgebra::{SMatrix, SymmetricEigen};

use super::{HypersurfaceModel, TangentVector};
use crate::error::{GeometryError, Result};
use crate::linalg::{bracket, ensure_in_s, inner_g, inner_s, phi, SquareComplexMatrix};

const DEGENERATE_PLANE_TOL: f64 = 1e-12;

/// `<R(X1,X2)X2, X1>_s = -<[[phi X1, phi X2], phi X2], phi X1>_g`, the
/// curvature of the symmetric space in the solvable model.
pub fn ambient_curvature(x1: &SquareComplexMatrix, x2: &SquareComplexMatrix) -> Result<f64> {
    ensure_in_s(x1)?;
    ensure_in_s(x2)?;
    Ok(ambient_curvature_unchecked(x1, x2))
}

fn ambient_curvature_unchecked(x1: &SquareComplexMatrix, x2: &SquareComplexMatrix) -> f64 {
    let p1 = phi(x1);
    let p2 = phi(x2);
    let inner = &(&p1 * &p2) - &(&p2 * &p1);
    let outer = &(&inner * &p2) - &(&p2 * &inner);
    -inner_g(&outer, &p1).expect("3x3 operands")
}

/// `M(a) = -4 sin(a)`.
pub fn mean_curvature_closed_form(alpha: f64) -> f64 {
    -4.0 * alpha.sin()
}

impl HypersurfaceModel {
    /// `<nabla_X1 T_H, X2> = 1/2 (<phi X1, phi [X2, T_H]>_g + <phi X2, phi [X1, T_H]>_g)`.
    pub fn second_fundamental_form(&self, x1: &TangentVector, x2: &TangentVector) -> f64 {
        self.second_fundamental_form_matrices(&self.tangent_matrix(x1), &self.tangent_matrix(x2))
    }

    pub(crate) fn second_fundamental_form_matrices(
        &self,
        x1: &SquareComplexMatrix,
        x2: &SquareComplexMatrix,
    ) -> f64 {
        let b2 = bracket(x2, self.normal()).expect("3x3 operands");
        let b1 = bracket(x1, self.normal()).expect("3x3 operands");
        let a = inner_g(&phi(x1), &phi(&b2)).expect("3x3 operands");
        let b = inner_g(&phi(x2), &phi(&b1)).expect("3x3 operands");
        0.5 * (a + b)
    }

    /// The second fundamental form in the orthonormal basis `(V, iV, W, iW, Z0, iZ0, H)`.
    pub fn shape_operator(&self) -> SMatrix<f64, 7, 7> {
        let b = self.basis();
        SMatrix::from_fn(|i, j| self.second_fundamental_form_matrices(&b[i], &b[j]))
    }

    /// Eigenvalues of the second fundamental form, descending.
    pub fn shape_spectrum(&self) -> [f64; 7] {
        let eig = SymmetricEigen::new(self.shape_operator());
        let mut out: [f64; 7] = eig.eigenvalues.into();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    /// Trace of the second fundamental form over the orthonormal basis.
    pub fn mean_curvature(&self) -> f64 {
        self.shape_operator().trace()
    }

    /// Sectional curvature of `S_H` on the plane spanned by `X1, X2`, from the
    /// Gauss equation.
    pub fn gauss_sectional(&self, x1: &TangentVector, x2: &TangentVector) -> Result<f64> {
        let m1 = self.tangent_matrix(x1);
        let m2 = self.tangent_matrix(x2);
        let g11 = inner_s(&m1, &m1)?;
        let g22 = inner_s(&m2, &m2)?;
        let g12 = inner_s(&m1, &m2)?;
        let det = g11 * g22 - g12 * g12;
        if det <= DEGENERATE_PLANE_TOL {
            return Err(GeometryError::DegeneratePlane(det));
        }
        Ok(self.gauss_curvature_form(&m1, &m2) / det)
    }

    /// `<R^{S_H}(X1,X2)X2, X1>` from the Gauss equation, unnormalized.
    pub(crate) fn gauss_curvature_form(
        &self,
        m1: &SquareComplexMatrix,
        m2: &SquareComplexMatrix,
    ) -> f64 {
        let ii11 = self.second_fundamental_form_matrices(m1, m1);
        let ii22 = self.second_fundamental_form_matrices(m2, m2);
        let ii12 = self.second_fundamental_form_matrices(m1, m2);
        ambient_curvature_unchecked(m1, m2) + ii11 * ii22 - ii12 * ii12
    }
}
