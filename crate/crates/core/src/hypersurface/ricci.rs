use std::f64::consts::FRAC_PI_3;

use super::{check_alpha, HypersurfaceModel, TangentVector};
use crate::error::{GeometryError, Result};

/// Tolerance on `|X|^2 = 1` for operations that require a unit vector.
pub const UNIT_TOL: f64 = 1e-10;

impl HypersurfaceModel {
    /// `Ric(X) = sum_e <R^{S_H}(e, X)X, e>` over `(V, iV, W, iW, Z0, iZ0, H)`,
    /// each term from the Gauss equation. Quadratic in `X`.
    pub fn ricci_gauss(&self, x: &TangentVector) -> f64 {
        let mx = self.tangent_matrix(x);
        self.basis()
            .iter()
            .map(|e| self.gauss_curvature_form(e, &mx))
            .sum()
    }
}

/// `Ric(X) = -3 + 4 sin(a) (sin(a - pi/3)|a|^2 + sin(a + pi/3)|b|^2 + sin(a)|c|^2)`
/// for a unit vector `X`.
pub fn ricci_closed(alpha: f64, x: &TangentVector) -> Result<f64> {
    check_alpha(alpha)?;
    let n = x.norm_sqr();
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(GeometryError::NotUnit(n));
    }
    let s = alpha.sin();
    Ok(-3.0
        + 4.0
            * s
            * ((alpha - FRAC_PI_3).sin() * x.a.norm_sqr()
                + (alpha + FRAC_PI_3).sin() * x.b.norm_sqr()
                + s * x.c.norm_sqr()))
}

/// `(min, max)` of the Ricci curvature over unit tangent vectors.
///
/// On the unit sphere the closed form is `-3` plus a diagonal quadratic form
/// with weights `4 sin(a) * {sin(a - pi/3), sin(a + pi/3), sin(a), 0}` on
/// `|a|^2, |b|^2, |c|^2, t^2`, so the extremes are the extreme weights.
pub fn ricci_extremes(alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let s = alpha.sin();
    let weights =
        [(alpha - FRAC_PI_3).sin(), (alpha + FRAC_PI_3).sin(), s, 0.0].map(|w| 4.0 * s * w);
    let min = weights.iter().copied().fold(f64::INFINITY, f64::min);
    let max = weights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((-3.0 + min, -3.0 + max))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    use num_complex::Complex64;

    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn ricci_gauss_examples() {
        for alpha in [0.0, 0.5, FRAC_PI_3, FRAC_PI_2] {
            let m = HypersurfaceModel::new(alpha).unwrap();
            assert!((m.ricci_gauss(&TangentVector::basis(6)) + 3.0).abs() < 1e-13);
        }
        let m = HypersurfaceModel::new(FRAC_PI_3).unwrap();
        assert!(m.ricci_gauss(&TangentVector::basis(4)).abs() < 1e-13);
        let m = HypersurfaceModel::new(0.0).unwrap();
        assert!((m.ricci_gauss(&TangentVector::basis(0)) + 3.0).abs() < 1e-13);
    }

    #[test]
    fn ricci_closed_examples() {
        let z = TangentVector::new(c(0.0), c(0.0), c(1.0), 0.0);
        assert!(ricci_closed(FRAC_PI_3, &z).unwrap().abs() < 1e-15);
        let w = TangentVector::new(c(0.0), c(1.0), c(0.0), 0.0);
        assert!((ricci_closed(FRAC_PI_2, &w).unwrap() + 1.0).abs() < 1e-15);
        let h = TangentVector::basis(6);
        assert_eq!(ricci_closed(0.9, &h).unwrap(), -3.0);
    }

    #[test]
    fn ricci_closed_rejects_non_unit_and_bad_angle() {
        let x = TangentVector::new(c(1.0), c(1.0), c(0.0), 0.0);
        assert!(matches!(
            ricci_closed(0.2, &x),
            Err(GeometryError::NotUnit(_))
        ));
        assert!(ricci_closed(2.0, &TangentVector::basis(6)).is_err());
    }

    #[test]
    fn ricci_extremes_examples() {
        let (lo, hi) = ricci_extremes(0.0).unwrap();
        assert_eq!((lo, hi), (-3.0, -3.0));
        let (lo, hi) = ricci_extremes(FRAC_PI_3).unwrap();
        assert!((lo + 3.0).abs() < 1e-15 && hi.abs() < 1e-15);
        let (lo, hi) = ricci_extremes(FRAC_PI_2).unwrap();
        assert!((lo + 3.0).abs() < 1e-15 && (hi - 1.0).abs() < 1e-15);
        // below pi/3 the V direction drops under -3
        let (lo, _) = ricci_extremes(FRAC_PI_6).unwrap();
        assert!((lo + 4.0).abs() < 1e-14);
        assert!(ricci_extremes(-0.1).is_err());
    }
}
