//! Iwasawa data of `sl(3,C) = n + a + su(3)`: the root vectors `V, W, Z0`, the
//! orthonormal basis `H0, H1` of `a`, and the 8-element orthonormal basis of
//! `s = n + a`.

use num_complex::Complex64;

use crate::linalg::SquareComplexMatrix;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `E_12`.
pub fn v() -> SquareComplexMatrix {
    SquareComplexMatrix::unit(3, 0, 1)
}

/// `E_23`.
pub fn w() -> SquareComplexMatrix {
    SquareComplexMatrix::unit(3, 1, 2)
}

/// `E_13`.
pub fn z0() -> SquareComplexMatrix {
    SquareComplexMatrix::unit(3, 0, 2)
}

/// `diag(1/2, 0, -1/2)`.
pub fn h0() -> SquareComplexMatrix {
    SquareComplexMatrix::from_real_diagonal(&[0.5, 0.0, -0.5])
}

/// `diag(1/(2 sqrt 3), -1/sqrt 3, 1/(2 sqrt 3))`.
pub fn h1() -> SquareComplexMatrix {
    let r = 3f64.sqrt();
    SquareComplexMatrix::from_real_diagonal(&[1.0 / (2.0 * r), -1.0 / r, 1.0 / (2.0 * r)])
}

/// `i * m`.
pub fn times_i(m: &SquareComplexMatrix) -> SquareComplexMatrix {
    m.scale_complex(I)
}

/// The fixed matrix model of the symmetric space as the solvable group `NA`.
#[derive(Debug, Clone)]
pub struct AmbientModel {
    basis: Vec<SquareComplexMatrix>,
    labels: Vec<String>,
}

impl AmbientModel {
    pub const LABELS: [&'static str; 8] = ["V", "iV", "W", "iW", "Z0", "iZ0", "H0", "H1"];

    pub fn new() -> Self {
        let basis = vec![
            v(),
            times_i(&v()),
            w(),
            times_i(&w()),
            z0(),
            times_i(&z0()),
            h0(),
            h1(),
        ];
        Self {
            basis,
            labels: Self::LABELS.iter().map(|s| s.to_string()).collect(),
        }
    }

    /// `(V, iV, W, iW, Z0, iZ0, H0, H1)`, orthonormal for `<.,.>_s`.
    pub fn basis(&self) -> &[SquareComplexMatrix] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The nilpotent part `(V, iV, W, iW, Z0, iZ0)`.
    pub fn nilpotent_basis(&self) -> &[SquareComplexMatrix] {
        &self.basis[..6]
    }

    /// Expands real coordinates in [`Self::basis`] into a matrix.
    pub fn combine(&self, coeffs: &[f64]) -> SquareComplexMatrix {
        combine(&self.basis, coeffs)
    }
}

impl Default for AmbientModel {
    fn default() -> Self {
        Self::new()
    }
}

/// `sum_i coeffs[i] * basis[i]`.
pub fn combine(basis: &[SquareComplexMatrix], coeffs: &[f64]) -> SquareComplexMatrix {
    assert_eq!(
        basis.len(),
        coeffs.len(),
        "coefficient count differs from basis size"
    );
    let mut out = SquareComplexMatrix::zeros(basis[0].dim());
    for (m, &c) in basis.iter().zip(coeffs) {
        if c != 0.0 {
            out = &out + &m.scale(c);
        }
    }
    out
}
