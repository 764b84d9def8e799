use nalgebra::{DMatrix, DVector, SymmetricEigen};

use super::CoefficientVector;
use crate::error::{GeometryError, Result};
use crate::linalg::{bracket, inner_g, inner_s, SquareComplexMatrix};

/// Maximum componentwise Jacobi-identity violation accepted for structure constants.
pub const JACOBI_TOL: f64 = 1e-10;
/// Maximum least-squares residual when expanding brackets of a matrix basis.
pub const CLOSURE_TOL: f64 = 1e-9;

const ANTISYMMETRY_TOL: f64 = 1e-12;
const GRAM_SYMMETRY_TOL: f64 = 1e-12;
const GRAM_MIN_EIGENVALUE: f64 = 1e-10;
const INDEPENDENCE_TOL: f64 = 1e-10;

/// A real Lie algebra with structure constants `[e_i, e_j] = sum_k c[i][j][k] e_k`
/// and a positive-definite Gram matrix `g[i][j] = <e_i, e_j>`.
#[derive(Debug, Clone)]
pub struct MetricLieAlgebra {
    dim: usize,
    structure: Vec<f64>,
    gram: DMatrix<f64>,
    gram_inv: DMatrix<f64>,
    // nabla_{e_i} e_j = sum_k christoffel[(i*dim + j)*dim + k] e_k
    christoffel: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl MetricLieAlgebra {
    /// Validates and builds an algebra. `structure` is the flattened
    /// `dim x dim x dim` array indexed as `(i*dim + j)*dim + k`; `gram` is
    /// row-major `dim x dim`.
    ///
    /// Checks run in order: shapes, antisymmetry, Gram symmetry, Gram
    /// positivity, Jacobi identity. The first failure is returned.
    pub fn new(
        dim: usize,
        structure: Vec<f64>,
        gram: Vec<f64>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(GeometryError::InvalidAlgebra(
                "dimension must be positive".into(),
            ));
        }
        if structure.len() != dim * dim * dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim * dim * dim,
                actual: structure.len(),
            });
        }
        if gram.len() != dim * dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim * dim,
                actual: gram.len(),
            });
        }
        if let Some(labels) = &labels {
            if labels.len() != dim {
                return Err(GeometryError::InvalidAlgebra(format!(
                    "expected {dim} labels, got {}",
                    labels.len()
                )));
            }
        }
        if structure.iter().chain(&gram).any(|x| !x.is_finite()) {
            return Err(GeometryError::InvalidAlgebra("non-finite entry".into()));
        }

        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if (structure[idx(i, j, k)] + structure[idx(j, i, k)]).abs() > ANTISYMMETRY_TOL
                    {
                        return Err(GeometryError::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }

        let gram = DMatrix::from_row_slice(dim, dim, &gram);
        let asym = (&gram - gram.transpose()).abs().max();
        if asym > GRAM_SYMMETRY_TOL {
            return Err(GeometryError::AsymmetricGram(asym));
        }
        let min_eig = SymmetricEigen::new(gram.clone()).eigenvalues.min();
        if min_eig <= GRAM_MIN_EIGENVALUE {
            return Err(GeometryError::SingularGram(min_eig));
        }

        let jacobi = jacobi_residual(dim, &structure);
        if jacobi > JACOBI_TOL {
            return Err(GeometryError::JacobiViolated(jacobi));
        }

        let gram_inv = gram
            .clone()
            .cholesky()
            .ok_or(GeometryError::SingularGram(min_eig))?
            .inverse();
        let christoffel = christoffel_table(dim, &structure, &gram, &gram_inv);
        Ok(Self {
            dim,
            structure,
            gram,
            gram_inv,
            christoffel,
            labels,
        })
    }

    /// The abelian algebra of dimension `dim` with identity Gram matrix.
    pub fn abelian(dim: usize) -> Result<Self> {
        let gram = DMatrix::<f64>::identity(dim, dim);
        Self::new(
            dim,
            vec![0.0; dim * dim * dim],
            gram.transpose().as_slice().to_vec(),
            None,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Largest component of the Jacobiator over all basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        jacobi_residual(self.dim, &self.structure)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure(&self) -> &[f64] {
        &self.structure
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub(crate) fn gram_inverse(&self) -> &DMatrix<f64> {
        &self.gram_inv
    }

    pub(crate) fn christoffel(&self, i: usize, j: usize, k: usize) -> f64 {
        self.christoffel[(i * self.dim + j) * self.dim + k]
    }

    pub fn check_dim(&self, x: &CoefficientVector) -> Result<()> {
        if x.len() != self.dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.dim,
                actual: x.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(
        &self,
        x: &CoefficientVector,
        y: &CoefficientVector,
    ) -> Result<CoefficientVector> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.bracket_unchecked(x.as_slice(), y.as_slice()))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[f64], y: &[f64]) -> CoefficientVector {
        let n = self.dim;
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
                let row = &self.structure[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, c) in out.iter_mut().zip(row) {
                    *o += w * c;
                }
            }
        }
        CoefficientVector::new(out)
    }

    pub fn inner(&self, x: &CoefficientVector, y: &CoefficientVector) -> Result<f64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.inner_unchecked(x.as_slice(), y.as_slice()))
    }

    pub(crate) fn inner_unchecked(&self, x: &[f64], y: &[f64]) -> f64 {
        let n = self.dim;
        let mut acc = 0.0;
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                acc += x[i] * self.gram[(i, j)] * y[j];
            }
        }
        acc
    }

    pub fn norm(&self, x: &CoefficientVector) -> Result<f64> {
        Ok(self.inner(x, x)?.max(0.0).sqrt())
    }

    /// Solves `gram * out = rhs`, converting a covector into a vector.
    pub(crate) fn raise(&self, rhs: &[f64]) -> CoefficientVector {
        let v = &self.gram_inv * DVector::from_column_slice(rhs);
        CoefficientVector::new(v.as_slice().to_vec())
    }
}

/// Which inner product a matrix basis is measured with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerProductKind {
    /// `<.,.>_s` on the solvable algebra `s = n + a`.
    Solvable,
    /// `<.,.>_g = 2 Re Tr(X conj(Y)^T)` on all of `sl(n,C)`.
    Ambient,
}

/// Builds the metric Lie algebra spanned (over the reals) by a list of
/// matrices, expanding each bracket in the basis by least squares.
pub fn from_matrix_basis(
    basis: &[SquareComplexMatrix],
    inner: InnerProductKind,
) -> Result<MetricLieAlgebra> {
    let d = basis.len();
    if d == 0 {
        return Err(GeometryError::InvalidArgument("empty basis".into()));
    }
    let n = basis[0].dim();
    for m in basis {
        if m.dim() != n {
            return Err(GeometryError::DimensionMismatch {
                expected: n,
                actual: m.dim(),
            });
        }
    }

    let rows = 2 * n * n;
    let mut coords = DMatrix::<f64>::zeros(rows, d);
    for (col, m) in basis.iter().enumerate() {
        coords.set_column(col, &DVector::from_vec(m.to_real_vec()));
    }
    let svd = coords.clone().svd(true, true);
    let smallest = svd.singular_values.min();
    if smallest <= INDEPENDENCE_TOL {
        return Err(GeometryError::LinearlyDependentBasis(smallest));
    }

    let mut structure = vec![0.0; d * d * d];
    for i in 0..d {
        for j in (i + 1)..d {
            let b = DVector::from_vec(bracket(&basis[i], &basis[j])?.to_real_vec());
            let c = svd
                .solve(&b, 0.0)
                .map_err(|e| GeometryError::InvalidArgument(e.to_string()))?;
            let residual = (&coords * &c - &b).amax();
            if residual > CLOSURE_TOL {
                return Err(GeometryError::NotSubalgebra {
                    residual,
                    threshold: CLOSURE_TOL,
                });
            }
            for k in 0..d {
                structure[(i * d + j) * d + k] = c[k];
                structure[(j * d + i) * d + k] = -c[k];
            }
        }
    }

    let mut gram = vec![0.0; d * d];
    for i in 0..d {
        for j in i..d {
            let g = match inner {
                InnerProductKind::Solvable => inner_s(&basis[i], &basis[j])?,
                InnerProductKind::Ambient => inner_g(&basis[i], &basis[j])?,
            };
            gram[i * d + j] = g;
            gram[j * d + i] = g;
        }
    }

    MetricLieAlgebra::new(d, structure, gram, None)
}

impl MetricLieAlgebra {
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(GeometryError::InvalidAlgebra(format!(
                "expected {} labels, got {}",
                self.dim,
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }
}

/// Largest component of `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
pub(crate) fn jacobi_residual(dim: usize, c: &[f64]) -> f64 {
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    let mut worst: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let mut s = 0.0;
                    for m in 0..dim {
                        s += c[idx(i, j, m)] * c[idx(m, k, l)]
                            + c[idx(j, k, m)] * c[idx(m, i, l)]
                            + c[idx(k, i, m)] * c[idx(m, j, l)];
                    }
                    worst = worst.max(s.abs());
                }
            }
        }
    }
    worst
}

// <nabla_{e_i} e_j, e_k> = 1/2 (<[e_i,e_j],e_k> + <e_i,[e_k,e_j]> + <e_j,[e_k,e_i]>)
fn christoffel_table(
    dim: usize,
    c: &[f64],
    gram: &DMatrix<f64>,
    gram_inv: &DMatrix<f64>,
) -> Vec<f64> {
    let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
    // lowered[i][j][l] = <[e_i, e_j], e_l>
    let mut lowered = vec![0.0; dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            for l in 0..dim {
                lowered[idx(i, j, l)] = (0..dim).map(|k| c[idx(i, j, k)] * gram[(k, l)]).sum();
            }
        }
    }
    let mut table = vec![0.0; dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let cov: Vec<f64> = (0..dim)
                .map(|k| {
                    0.5 * (lowered[idx(i, j, k)] + lowered[idx(k, j, i)] + lowered[idx(k, i, j)])
                })
                .collect();
            for k in 0..dim {
                table[idx(i, j, k)] = (0..dim).map(|l| gram_inv[(k, l)] * cov[l]).sum();
            }
        }
    }
    table
}
