//! Seeded sampling of sectional curvatures and the search for flat planes.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::{HypersurfaceModel, TangentVector};
use crate::error::Result;

/// Starting points taken from the best random planes for the flat-plane search.
const SEARCH_STARTS: usize = 4;
const SEARCH_INITIAL_STEP: f64 = 0.25;
const SEARCH_MIN_STEP: f64 = 1e-12;
const SEARCH_TARGET: f64 = 1e-14;
const SEARCH_MAX_SWEEPS: usize = 20_000;

/// A standard-Gaussian direction, normalized.
pub fn random_unit_tangent<R: Rng + ?Sized>(rng: &mut R) -> TangentVector {
    let mut x = [0.0; 7];
    for v in &mut x {
        *v = StandardNormal.sample(rng);
    }
    TangentVector::from_coords(&x).normalized()
}

/// Orthonormal pair from two Gaussian vectors by Gram-Schmidt.
pub fn random_plane<R: Rng + ?Sized>(rng: &mut R) -> (TangentVector, TangentVector) {
    let u = random_unit_tangent(rng);
    let mut w = random_unit_tangent(rng).coords();
    let uc = u.coords();
    let p: f64 = uc.iter().zip(&w).map(|(a, b)| a * b).sum();
    for (wi, ui) in w.iter_mut().zip(uc) {
        *wi -= p * ui;
    }
    (u, TangentVector::from_coords(&w).normalized())
}

/// The orthonormal pair `sqrt(2/3) W + Z0/sqrt 3`, `-sqrt(2/3) iW + i Z0/sqrt 3`.
pub fn sigma_plane() -> (TangentVector, TangentVector) {
    let b = (2.0f64 / 3.0).sqrt();
    let c = 1.0 / 3f64.sqrt();
    (
        TangentVector::from_coords(&[0.0, 0.0, b, 0.0, c, 0.0, 0.0]),
        TangentVector::from_coords(&[0.0, 0.0, 0.0, -b, 0.0, c, 0.0]),
    )
}

/// `K(sigma) = 4/(3 sqrt 3) sin(a) cos(a) + sin(a)^2 / 9`.
pub fn k_sigma_closed_form(alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    4.0 / (3.0 * 3f64.sqrt()) * s * c + s * s / 9.0
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneScan {
    pub max_k: f64,
    pub argmax: (TangentVector, TangentVector),
    pub min_k: f64,
    pub planes: usize,
}

/// Largest sectional curvature over `samples` seeded random planes plus the
/// plane `sigma`, which is always included.
pub fn nonpositivity_scan(alpha: f64, samples: usize, seed: u64) -> Result<PlaneScan> {
    let model = HypersurfaceModel::new(alpha)?;
    let sigma = sigma_plane();
    let k_sigma = model.gauss_sectional(&sigma.0, &sigma.1)?;
    let mut scan = PlaneScan {
        max_k: k_sigma,
        argmax: sigma,
        min_k: k_sigma,
        planes: 1,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (u, w) = random_plane(&mut rng);
        let k = model.gauss_sectional(&u, &w)?;
        if k > scan.max_k {
            scan.max_k = k;
            scan.argmax = (u, w);
        }
        scan.min_k = scan.min_k.min(k);
        scan.planes += 1;
    }
    Ok(scan)
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroPlaneSearch {
    /// `|K|` of the best random plane.
    pub start_abs_k: f64,
    /// `|K|` after local minimization.
    pub abs_k: f64,
    pub plane: (TangentVector, TangentVector),
}

/// Looks for a plane of zero sectional curvature: samples random planes
/// (the known flat witness `sigma` is deliberately not among them), then
/// runs a compass search on `|K|` over the 14 coordinates of the spanning
/// pair from the best few samples.
pub fn zero_curvature_search(alpha: f64, samples: usize, seed: u64) -> Result<ZeroPlaneSearch> {
    let model = HypersurfaceModel::new(alpha)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranked: Vec<(f64, [f64; 14])> = Vec::with_capacity(samples);
    for _ in 0..samples.max(1) {
        let (u, w) = random_plane(&mut rng);
        let k = model.gauss_sectional(&u, &w)?.abs();
        let mut p = [0.0; 14];
        p[..7].copy_from_slice(&u.coords());
        p[7..].copy_from_slice(&w.coords());
        ranked.push((k, p));
    }
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0));
    let start_abs_k = ranked[0].0;

    let objective = |p: &[f64; 14]| -> f64 {
        let (u, w) = split(p);
        model
            .gauss_sectional(&u, &w)
            .map(f64::abs)
            .unwrap_or(f64::INFINITY)
    };

    let mut best = (f64::INFINITY, ranked[0].1);
    for &(k0, p0) in ranked.iter().take(SEARCH_STARTS) {
        let (k, p) = compass_search(&objective, k0, p0);
        if k < best.0 {
            best = (k, p);
        }
        if best.0 <= SEARCH_TARGET {
            break;
        }
    }
    let (u, w) = split(&best.1);
    Ok(ZeroPlaneSearch {
        start_abs_k,
        abs_k: best.0,
        plane: (u, w),
    })
}

fn split(p: &[f64; 14]) -> (TangentVector, TangentVector) {
    let mut u = [0.0; 7];
    let mut w = [0.0; 7];
    u.copy_from_slice(&p[..7]);
    w.copy_from_slice(&p[7..]);
    (
        TangentVector::from_coords(&u),
        TangentVector::from_coords(&w),
    )
}

// Derivative-free coordinate search: try +-step on each coordinate, keep any
// improvement, halve the step after a sweep without one.
fn compass_search(
    f: &impl Fn(&[f64; 14]) -> f64,
    mut fx: f64,
    mut x: [f64; 14],
) -> (f64, [f64; 14]) {
    let mut step = SEARCH_INITIAL_STEP;
    for _ in 0..SEARCH_MAX_SWEEPS {
        if fx <= SEARCH_TARGET || step < SEARCH_MIN_STEP {
            break;
        }
        let mut improved = false;
        for i in 0..14 {
            for dir in [1.0, -1.0] {
                let mut y = x;
                y[i] += dir * step;
                let fy = f(&y);
                if fy < fx {
                    x = y;
                    fx = fy;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    (fx, x)
}
