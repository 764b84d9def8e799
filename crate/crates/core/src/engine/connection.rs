use nalgebra::{DMatrix, SymmetricEigen};

use super::{CoefficientVector, MetricLieAlgebra};
use crate::error::{GeometryError, Result};

const DEGENERATE_PLANE_TOL: f64 = 1e-12;

/// How to turn the algebra's basis into a Gram-orthonormal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrthonormalFrame {
    /// Modified Gram-Schmidt in basis order.
    #[default]
    GramSchmidt,
    /// Columns of `gram^{-1/2}`.
    SymmetricSqrt,
}

impl MetricLieAlgebra {
    /// `nabla_X Y` for the left-invariant fields `X`, `Y`.
    pub fn koszul(
        &self,
        x: &CoefficientVector,
        y: &CoefficientVector,
    ) -> Result<CoefficientVector> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.nabla(x.as_slice(), y.as_slice()))
    }

    pub(crate) fn nabla(&self, x: &[f64], y: &[f64]) -> CoefficientVector {
        let n = self.dim();
        let mut out = vec![0.0; n];
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = x[i] * y[j];
                if w == 0.0 {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += w * self.christoffel(i, j, k);
                }
            }
        }
        CoefficientVector::new(out)
    }

    /// `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`.
    pub fn curvature(
        &self,
        x: &CoefficientVector,
        y: &CoefficientVector,
        z: &CoefficientVector,
    ) -> Result<CoefficientVector> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        self.check_dim(z)?;
        Ok(self.curvature_unchecked(x.as_slice(), y.as_slice(), z.as_slice()))
    }

    fn curvature_unchecked(&self, x: &[f64], y: &[f64], z: &[f64]) -> CoefficientVector {
        let nyz = self.nabla(y, z);
        let nxz = self.nabla(x, z);
        let xy = self.bracket_unchecked(x, y);
        let a = self.nabla(x, nyz.as_slice());
        let b = self.nabla(y, nxz.as_slice());
        let c = self.nabla(xy.as_slice(), z);
        &(&a - &b) - &c
    }

    /// `<R(X,Y)Y, X>` without normalization.
    pub fn curvature_form(&self, x: &CoefficientVector, y: &CoefficientVector) -> Result<f64> {
        let r = self.curvature(x, y, y)?;
        self.inner(&r, x)
    }

    /// Sectional curvature of the plane spanned by `X` and `Y`.
    pub fn sectional(&self, x: &CoefficientVector, y: &CoefficientVector) -> Result<f64> {
        let xx = self.inner(x, x)?;
        let yy = self.inner(y, y)?;
        let xy = self.inner(x, y)?;
        let det = xx * yy - xy * xy;
        if det <= DEGENERATE_PLANE_TOL {
            return Err(GeometryError::DegeneratePlane(det));
        }
        Ok(self.curvature_form(x, y)? / det)
    }

    /// Gram-orthonormal basis vectors, as columns.
    pub fn orthonormal_frame(&self, kind: OrthonormalFrame) -> Vec<CoefficientVector> {
        let n = self.dim();
        match kind {
            OrthonormalFrame::GramSchmidt => {
                let mut frame: Vec<CoefficientVector> = Vec::with_capacity(n);
                for i in 0..n {
                    let mut e = CoefficientVector::basis(n, i);
                    for f in &frame {
                        let p = self.inner_unchecked(e.as_slice(), f.as_slice());
                        e.axpy(-p, f);
                    }
                    let norm = self.inner_unchecked(e.as_slice(), e.as_slice()).sqrt();
                    frame.push(e.scale(1.0 / norm));
                }
                frame
            }
            OrthonormalFrame::SymmetricSqrt => {
                let eig = SymmetricEigen::new(self.gram().clone());
                let inv_sqrt = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l.sqrt()));
                let m = &eig.eigenvectors * inv_sqrt * eig.eigenvectors.transpose();
                (0..n)
                    .map(|j| CoefficientVector::new(m.column(j).iter().copied().collect()))
                    .collect()
            }
        }
    }

    /// `Ric(X) = sum_a <R(f_a, X)X, f_a>` over a Gram-orthonormal frame.
    pub fn ricci(&self, x: &CoefficientVector) -> Result<f64> {
        self.ricci_in_frame(x, OrthonormalFrame::default())
    }

    pub fn ricci_in_frame(&self, x: &CoefficientVector, kind: OrthonormalFrame) -> Result<f64> {
        self.check_dim(x)?;
        if x.max_abs() == 0.0 {
            return Ok(0.0);
        }
        let frame = self.orthonormal_frame(kind);
        Ok(frame
            .iter()
            .map(|f| {
                let r = self.curvature_unchecked(f.as_slice(), x.as_slice(), x.as_slice());
                self.inner_unchecked(r.as_slice(), f.as_slice())
            })
            .sum())
    }

    /// Matrix of the Ricci form in the Gram-Schmidt frame, `Ric(f_a, f_b)`.
    pub fn ricci_matrix(&self) -> DMatrix<f64> {
        let frame = self.orthonormal_frame(OrthonormalFrame::GramSchmidt);
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let v: f64 = frame
                    .iter()
                    .map(|f| {
                        let r = self.curvature_unchecked(
                            f.as_slice(),
                            frame[a].as_slice(),
                            frame[b].as_slice(),
                        );
                        self.inner_unchecked(r.as_slice(), f.as_slice())
                    })
                    .sum();
                m[(a, b)] = v;
                m[(b, a)] = v;
            }
        }
        m
    }

    /// Ascending eigenvalues of the Ricci form with respect to the metric.
    pub fn ricci_eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.ricci_matrix())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// `(spread <= tol, mean eigenvalue)` where spread is the largest
    /// deviation of a Ricci eigenvalue from the mean.
    pub fn einstein_check(&self, tol: f64) -> (bool, f64) {
        let (mean, spread) = self.einstein_spread();
        (spread <= tol, mean)
    }

    /// `(mean eigenvalue, largest deviation from it)`.
    pub fn einstein_spread(&self) -> (f64, f64) {
        let ev = self.ricci_eigenvalues();
        let mean = ev.iter().sum::<f64>() / ev.len() as f64;
        let spread = ev.iter().map(|l| (l - mean).abs()).fold(0.0, f64::max);
        (mean, spread)
    }
}
