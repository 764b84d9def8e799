use thiserror::Error;

/// Errors raised by the geometry library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not in the solvable algebra s = n + a: {0}")]
    NotInSolvableAlgebra(String),

    #[error(
        "basis is not a subalgebra: bracket closure residual {residual:e} exceeds {threshold:e}"
    )]
    NotSubalgebra { residual: f64, threshold: f64 },

    #[error("basis matrices are linearly dependent (smallest singular value {0:e})")]
    LinearlyDependentBasis(f64),

    #[error("Gram matrix is singular or not positive definite (minimum eigenvalue {0:e})")]
    SingularGram(f64),

    #[error("Gram matrix is not symmetric (asymmetry {0:e})")]
    AsymmetricGram(f64),

    #[error("structure constants are not antisymmetric at ({i}, {j}, {k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("Jacobi identity violated (residual {0:e})")]
    JacobiViolated(f64),

    #[error("invalid algebra description: {0}")]
    InvalidAlgebra(String),

    #[error("degenerate plane (Gram determinant {0:e})")]
    DegeneratePlane(f64),

    #[error("angle {0} outside [0, pi/2]")]
    AngleOutOfRange(f64),

    #[error("tangent vector is not unit length (squared norm {0})")]
    NotUnit(f64),

    #[error("malformed index partition: {0}")]
    BadPartition(String),

    #[error("vector support violation: {0}")]
    SupportViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
