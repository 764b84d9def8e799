//! Lie-theoretic primitives on complex matrices: the commutator bracket, the
//! Cartan involution `X -> -conj(X)^T`, the Killing form and the two inner
//! products (on `g = sl(n,C)` and on the solvable part `s = n + a`).

use num_complex::Complex64;

use super::SquareComplexMatrix;
use crate::error::{GeometryError, Result};

/// Absolute tolerance for the traceless / in-`s` membership tests.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// `[X, Y] = XY - YX`.
pub fn bracket(x: &SquareComplexMatrix, y: &SquareComplexMatrix) -> Result<SquareComplexMatrix> {
    x.ensure_same_dim(y)?;
    Ok(&(x * y) - &(y * x))
}

/// `theta(X) = -conj(X)^T`.
pub fn cartan_involution(x: &SquareComplexMatrix) -> SquareComplexMatrix {
    -&x.adjoint()
}

/// Killing form of `sl(n,C)` viewed as a real Lie algebra, `4n Re Tr(XY)`
/// (equal to `12 Re Tr(XY)` for n = 3).
pub fn killing_form(x: &SquareComplexMatrix, y: &SquareComplexMatrix) -> Result<f64> {
    x.ensure_same_dim(y)?;
    let n = x.dim() as f64;
    Ok(4.0 * n * re_trace_product(x, y))
}

/// `<X, Y>_g = 2 Re Tr(X conj(Y)^T)`.
pub fn inner_g(x: &SquareComplexMatrix, y: &SquareComplexMatrix) -> Result<f64> {
    x.ensure_same_dim(y)?;
    let s: f64 = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| (a * b.conj()).re)
        .sum();
    Ok(2.0 * s)
}

/// The isometry `phi(X) = (X + conj(X)^T) / 2` from `s` onto `p`.
pub fn phi(x: &SquareComplexMatrix) -> SquareComplexMatrix {
    (x + &x.adjoint()).scale(0.5)
}

/// Checks that `x` lies in `s = n + a`: strictly upper triangular part free,
/// strictly lower part zero, real traceless diagonal.
pub fn ensure_in_s(x: &SquareComplexMatrix) -> Result<()> {
    let n = x.dim();
    for i in 0..n {
        for j in 0..i {
            if x[(i, j)].norm() > MEMBERSHIP_TOL {
                return Err(GeometryError::NotInSolvableAlgebra(format!(
                    "nonzero entry below the diagonal at ({i}, {j})"
                )));
            }
        }
        if x[(i, i)].im.abs() > MEMBERSHIP_TOL {
            return Err(GeometryError::NotInSolvableAlgebra(format!(
                "non-real diagonal entry at ({i}, {i})"
            )));
        }
    }
    let tr = x.trace().re;
    if tr.abs() > MEMBERSHIP_TOL {
        return Err(GeometryError::NotInSolvableAlgebra(format!(
            "diagonal is not traceless (trace {tr:e})"
        )));
    }
    Ok(())
}

/// `<Y1 + H, Y2 + H~>_s = Re Tr(Y1 conj(Y2)^T) + 2 Tr(H H~)` with `Y` the
/// strictly upper triangular part and `H` the diagonal part.
pub fn inner_s(x: &SquareComplexMatrix, y: &SquareComplexMatrix) -> Result<f64> {
    x.ensure_same_dim(y)?;
    ensure_in_s(x)?;
    ensure_in_s(y)?;
    let n = x.dim();
    let mut nilpotent = 0.0;
    let mut diagonal = 0.0;
    for i in 0..n {
        diagonal += x[(i, i)].re * y[(i, i)].re;
        for j in (i + 1)..n {
            nilpotent += (x[(i, j)] * y[(i, j)].conj()).re;
        }
    }
    Ok(nilpotent + 2.0 * diagonal)
}

fn re_trace_product(x: &SquareComplexMatrix, y: &SquareComplexMatrix) -> f64 {
    let n = x.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            acc += x[(i, k)] * y[(k, i)];
        }
    }
    acc.re
}
