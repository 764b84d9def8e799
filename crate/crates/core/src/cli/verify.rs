use std::io::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};
use serde::Serialize;

use super::{CliError, SweepConfig, EXIT_OK, EXIT_VERIFY_FAILED};
use crate::ambient::AmbientModel;
use crate::engine::{CoefficientVector, MetricLieAlgebra};
use crate::error::Result;
use crate::hypersurface::{
    ambient_curvature, build_ambient_algebra, build_hypersurface_algebra, foliation_residual,
    mean_curvature_closed_form, random_plane, random_unit_tangent, ricci_closed, GroupElement,
    HypersurfaceModel,
};

const JACOBI_TOL: f64 = 1e-10;
const SYMMETRY_TOL: f64 = 1e-10;
const PIPELINE_TOL: f64 = 1e-9;
const TRACE_TOL: f64 = 1e-12;
const DR_TOL: f64 = 1e-10;
const FOLIATION_TOL: f64 = 1e-10;
const HEBER_TOL: f64 = 1e-12;

/// Result of one self-check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl CheckOutcome {
    fn new(name: &str, residual: Result<f64>, tolerance: f64) -> Self {
        let residual = residual.unwrap_or(f64::INFINITY);
        Self {
            name: name.to_string(),
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }
}

fn gaussian_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CoefficientVector {
    CoefficientVector::new((0..dim).map(|_| StandardNormal.sample(rng)).collect())
}

fn hypersurface_algebras(
    cfg: &SweepConfig,
) -> Result<Vec<(f64, MetricLieAlgebra, HypersurfaceModel)>> {
    cfg.alphas()
        .into_iter()
        .map(|a| {
            Ok((
                a,
                build_hypersurface_algebra(a)?,
                HypersurfaceModel::new(a)?,
            ))
        })
        .collect()
}

fn jacobi(cfg: &SweepConfig) -> Result<f64> {
    let mut worst = build_ambient_algebra()?.jacobi_residual();
    for (_, alg, _) in hypersurface_algebras(cfg)? {
        worst = worst.max(alg.jacobi_residual());
    }
    Ok(worst)
}

// Antisymmetry in the last pair, pair symmetry and the first Bianchi identity
// of <R(X,Y)Z,W>, on random vectors.
fn curvature_symmetries(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut algebras: Vec<MetricLieAlgebra> = vec![build_ambient_algebra()?];
    algebras.extend(
        hypersurface_algebras(cfg)?
            .into_iter()
            .map(|(_, alg, _)| alg),
    );
    for alg in &algebras {
        let n = alg.dim();
        let rm =
            |x: &CoefficientVector,
             y: &CoefficientVector,
             z: &CoefficientVector,
             w: &CoefficientVector| { alg.inner(&alg.curvature(x, y, z)?, w) };
        for _ in 0..cfg.samples.max(1) / 10 + 1 {
            let [x, y, z, w] = [0; 4].map(|_| gaussian_vector(rng, n));
            let xyzw = rm(&x, &y, &z, &w)?;
            worst = worst
                .max((xyzw + rm(&x, &y, &w, &z)?).abs())
                .max((xyzw - rm(&z, &w, &x, &y)?).abs());
            let bianchi = alg
                .curvature(&x, &y, &z)?
                .as_slice()
                .iter()
                .zip(alg.curvature(&y, &z, &x)?.as_slice())
                .zip(alg.curvature(&z, &x, &y)?.as_slice())
                .map(|((a, b), c)| (a + b + c).abs())
                .fold(0.0, f64::max);
            worst = worst.max(bianchi);
        }
    }
    Ok(worst)
}

fn gauss_vs_koszul_sectional(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (_, alg, model) in hypersurface_algebras(cfg)? {
        for _ in 0..cfg.samples {
            let (u, w) = random_plane(rng);
            let k_gauss = model.gauss_sectional(&u, &w)?;
            let k_engine =
                alg.sectional(&u.coords().to_vec().into(), &w.coords().to_vec().into())?;
            worst = worst.max((k_gauss - k_engine).abs());
        }
    }
    Ok(worst)
}

fn gauss_vs_koszul_ricci(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (_, alg, model) in hypersurface_algebras(cfg)? {
        for _ in 0..cfg.samples {
            let x = random_unit_tangent(rng);
            let r = alg.ricci(&x.coords().to_vec().into())?;
            worst = worst.max((model.ricci_gauss(&x) - r).abs());
        }
    }
    Ok(worst)
}

fn gauss_vs_closed_ricci(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (alpha, _, model) in hypersurface_algebras(cfg)? {
        for _ in 0..cfg.samples {
            let x = random_unit_tangent(rng);
            worst = worst.max((model.ricci_gauss(&x) - ricci_closed(alpha, &x)?).abs());
        }
    }
    Ok(worst)
}

fn ambient_vs_koszul(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let alg = build_ambient_algebra()?;
    let ambient = AmbientModel::new();
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let x = gaussian_vector(rng, 8);
        let y = gaussian_vector(rng, 8);
        let form = ambient_curvature(
            &ambient.combine(x.as_slice()),
            &ambient.combine(y.as_slice()),
        )?;
        worst = worst.max((form - alg.curvature_form(&x, &y)?).abs());
    }
    Ok(worst)
}

// Mean curvature is the trace of the shape operator, the Cheeger constant
// the norm of the trace form; both have closed forms in the angle.
fn trace_identities(cfg: &SweepConfig) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (alpha, alg, model) in hypersurface_algebras(cfg)? {
        worst = worst
            .max((model.mean_curvature() - mean_curvature_closed_form(alpha)).abs())
            .max((alg.cheeger() - 4.0 * alpha.cos()).abs());
    }
    Ok(worst)
}

fn damek_ricci_at_zero() -> Result<f64> {
    let report = build_hypersurface_algebra(0.0)?.damek_ricci_check(&[0, 1, 2, 3], &[4, 5], 6)?;
    Ok(report
        .axioms()
        .iter()
        .map(|a| a.residual)
        .fold(report.j_squared_residual, f64::max))
}

fn foliation(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let angle = Uniform::new_inclusive(0.0, std::f64::consts::FRAC_PI_2).expect("valid range");
    let unit = Uniform::new(-1.0, 1.0).expect("valid range");
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.samples {
        let mut c = || Complex64::new(unit.sample(rng), unit.sample(rng));
        let (x, y, z) = (c(), c(), c());
        let q = GroupElement::on_leaf(angle.sample(rng), x, y, z, unit.sample(rng));
        worst = worst.max(foliation_residual(&q, unit.sample(rng))?);
    }
    Ok(worst)
}

fn heber_vector() -> Result<f64> {
    let hq = build_ambient_algebra()?.trace_form_vector();
    let mut expected = vec![0.0; 8];
    expected[6] = 4.0;
    Ok(hq
        .as_slice()
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// Runs every self-check with the sample count, seed and angle grid of `cfg`.
pub fn run_checks(cfg: &SweepConfig) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    vec![
        CheckOutcome::new("Jacobi identity", jacobi(cfg), JACOBI_TOL),
        CheckOutcome::new(
            "Curvature symmetries",
            curvature_symmetries(cfg, &mut rng),
            SYMMETRY_TOL,
        ),
        CheckOutcome::new(
            "Gauss vs Koszul sectional",
            gauss_vs_koszul_sectional(cfg, &mut rng),
            PIPELINE_TOL,
        ),
        CheckOutcome::new(
            "Gauss vs Koszul Ricci",
            gauss_vs_koszul_ricci(cfg, &mut rng),
            PIPELINE_TOL,
        ),
        CheckOutcome::new(
            "Gauss vs closed-form Ricci",
            gauss_vs_closed_ricci(cfg, &mut rng),
            cfg.tolerance,
        ),
        CheckOutcome::new(
            "Ambient vs Koszul curvature",
            ambient_vs_koszul(cfg, &mut rng),
            PIPELINE_TOL,
        ),
        CheckOutcome::new("Trace identities", trace_identities(cfg), TRACE_TOL),
        CheckOutcome::new(
            "Damek-Ricci axioms at alpha=0",
            damek_ricci_at_zero(),
            DR_TOL,
        ),
        CheckOutcome::new(
            "Foliation identity",
            foliation(cfg, &mut rng),
            FOLIATION_TOL,
        ),
        CheckOutcome::new("H_Q = 4·H0", heber_vector(), HEBER_TOL),
    ]
}

pub(super) fn cmd_verify(
    cfg: &SweepConfig,
    color: bool,
    out: &mut Vec<u8>,
) -> std::result::Result<i32, CliError> {
    let checks = run_checks(cfg);
    for c in &checks {
        let verdict = match (c.passed, color) {
            (true, true) => "\x1b[32mPASS\x1b[0m",
            (false, true) => "\x1b[31mFAIL\x1b[0m",
            (true, false) => "PASS",
            (false, false) => "FAIL",
        };
        let relation = if c.passed { "≤" } else { ">" };
        let _ = writeln!(
            out,
            "{}: {verdict} (residual {:.3e} {relation} {:e})",
            c.name, c.residual, c.tolerance
        );
    }
    let ok = checks.iter().all(|c| c.passed);
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
