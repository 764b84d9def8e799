use std::f64::consts::FRAC_PI_3;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::scan::{random_unit_tangent, sigma_plane};
use super::{
    build_hypersurface_algebra, check_alpha, ricci_closed, ricci_extremes, HypersurfaceModel,
};
use crate::error::Result;

/// Width of the band around `alpha = 0` and `alpha = pi/3` treated as the boundary.
pub const BOUNDARY_TOL: f64 = 1e-9;
/// Mean curvatures at or below this magnitude count as minimal.
pub const MINIMAL_TOL: f64 = 1e-12;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 42;

/// Sign pattern of the Ricci curvature of `S_H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    /// `Ric < 0` in every direction.
    NegativeRicci,
    /// `max Ric = 0`: there are Ricci-flat directions.
    RicciNullDirection,
    /// Directions of both signs.
    MixedRicci,
}

impl Regime {
    pub fn from_alpha(alpha: f64) -> Self {
        if alpha < FRAC_PI_3 - BOUNDARY_TOL {
            Regime::NegativeRicci
        } else if alpha <= FRAC_PI_3 + BOUNDARY_TOL {
            Regime::RicciNullDirection
        } else {
            Regime::MixedRicci
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::NegativeRicci => "NegativeRicci",
            Regime::RicciNullDirection => "RicciNullDirection",
            Regime::MixedRicci => "MixedRicci",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Summary of the geometry of one hypersurface.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    pub alpha: f64,
    pub mean_curvature: f64,
    pub cheeger: f64,
    pub shape_eigenvalues: [f64; 7],
    pub ricci_min: f64,
    pub ricci_max: f64,
    pub k_sigma: f64,
    pub regime: Regime,
    pub is_minimal: bool,
    pub is_einstein: bool,
    pub is_horosphere_range: bool,
    /// Largest `|ricci_gauss - ricci_closed|` over the sampled unit vectors.
    pub cross_pipeline_residual: f64,
}

pub fn classify(alpha: f64) -> Result<CurvatureReport> {
    classify_with(alpha, DEFAULT_SAMPLES, DEFAULT_SEED)
}

/// [`classify`] with an explicit sample count and seed for the cross-pipeline check.
pub fn classify_with(alpha: f64, samples: usize, seed: u64) -> Result<CurvatureReport> {
    check_alpha(alpha)?;
    let model = HypersurfaceModel::new(alpha)?;
    let cheeger = build_hypersurface_algebra(alpha)?.cheeger();
    let (ricci_min, ricci_max) = ricci_extremes(alpha)?;
    let sigma = sigma_plane();
    let k_sigma = model.gauss_sectional(&sigma.0, &sigma.1)?;
    let mean_curvature = model.mean_curvature();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residual: f64 = 0.0;
    for _ in 0..samples {
        let x = random_unit_tangent(&mut rng);
        residual = residual.max((model.ricci_gauss(&x) - ricci_closed(alpha, &x)?).abs());
    }

    Ok(CurvatureReport {
        alpha,
        mean_curvature,
        cheeger,
        shape_eigenvalues: model.shape_spectrum(),
        ricci_min,
        ricci_max,
        k_sigma,
        regime: Regime::from_alpha(alpha),
        is_minimal: mean_curvature.abs() <= MINIMAL_TOL,
        is_einstein: alpha <= BOUNDARY_TOL,
        is_horosphere_range: alpha >= FRAC_PI_3 - BOUNDARY_TOL,
        cross_pipeline_residual: residual,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_2;

    use super::*;

    #[test]
    fn alpha_zero_report() {
        let r = classify(0.0).unwrap();
        assert!(r.is_minimal && r.is_einstein && !r.is_horosphere_range);
        assert_eq!(r.regime, Regime::NegativeRicci);
        assert!((r.cheeger - 4.0).abs() < 1e-12);
        assert!(r.k_sigma.abs() < 1e-14);
        assert_eq!((r.ricci_min, r.ricci_max), (-3.0, -3.0));
        assert!(r.cross_pipeline_residual <= 1e-10);
    }

    #[test]
    fn alpha_pi_third_report() {
        let r = classify(FRAC_PI_3).unwrap();
        assert_eq!(r.regime, Regime::RicciNullDirection);
        assert!(r.is_horosphere_range && !r.is_minimal && !r.is_einstein);
        assert!((r.cheeger - 2.0).abs() < 1e-12);
        assert!(r.ricci_max.abs() < 1e-12);
    }

    #[test]
    fn alpha_pi_half_report() {
        let r = classify(FRAC_PI_2).unwrap();
        assert_eq!(r.regime, Regime::MixedRicci);
        assert!((r.mean_curvature + 4.0).abs() < 1e-12);
        assert!(r.cheeger.abs() < 1e-12);
        assert!(r.shape_eigenvalues.iter().all(|&e| e <= 1e-12));
    }

    #[test]
    fn out_of_range_angle_is_rejected() {
        assert!(classify(2.0).is_err());
    }
}
