//! Checker for the Damek-Ricci axioms of a metric solvable algebra
//! `s = v + z + R A`:
//!
//! 1. `A` is a unit vector orthogonal to `n = v + z`;
//! 2. `[v, v] ⊆ z` and `[v, z] = [z, z] = 0`;
//! 3. `v ⊥ z`;
//! 4. `J_Z^2 = -|Z|^2 id` on `v`, where `<J_Z U, U'> = <Z, [U, U']>`;
//! 5. `[A, U] = U/2` on `v` and `[A, Z] = Z` on `z`.
//!
//! Axioms 2-4 say that `n` is of Heisenberg type.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::{CoefficientVector, MetricLieAlgebra};
use crate::error::{GeometryError, Result};

/// Tolerance applied to every axiom residual.
pub const DR_TOL: f64 = 1e-10;
const RANDOM_CENTER_SAMPLES: usize = 100;
const RANDOM_CENTER_SEED: u64 = 0x5eed_da3e;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AxiomResult {
    pub passed: bool,
    pub residual: f64,
}

impl AxiomResult {
    fn new(residual: f64) -> Self {
        Self {
            passed: residual <= DR_TOL,
            residual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DamekRicciReport {
    pub axiom_1: AxiomResult,
    pub axiom_2: AxiomResult,
    pub axiom_3: AxiomResult,
    pub axiom_4: AxiomResult,
    pub axiom_5: AxiomResult,
    /// Worst `|J_Z^2 U + |Z|^2 U|` over basis and random unit `Z`.
    pub j_squared_residual: f64,
    pub is_two_step_nilpotent: bool,
    pub overall: bool,
}

impl DamekRicciReport {
    pub fn axioms(&self) -> [AxiomResult; 5] {
        [
            self.axiom_1,
            self.axiom_2,
            self.axiom_3,
            self.axiom_4,
            self.axiom_5,
        ]
    }
}

impl MetricLieAlgebra {
    pub fn damek_ricci_check(
        &self,
        v_indices: &[usize],
        z_indices: &[usize],
        a_index: usize,
    ) -> Result<DamekRicciReport> {
        self.check_partition(v_indices, z_indices, a_index)?;
        let n = self.dim();
        let e = |i: usize| CoefficientVector::basis(n, i);
        let a = e(a_index);
        let nil: Vec<usize> = v_indices.iter().chain(z_indices).copied().collect();

        let mut r1 = (self.inner_unchecked(a.as_slice(), a.as_slice()) - 1.0).abs();
        for &i in &nil {
            r1 = r1.max(self.gram()[(a_index, i)].abs());
        }

        let mut r2: f64 = 0.0;
        for &i in v_indices {
            for &j in v_indices {
                let b = self.bracket_unchecked(e(i).as_slice(), e(j).as_slice());
                for k in (0..n).filter(|k| !z_indices.contains(k)) {
                    r2 = r2.max(b[k].abs());
                }
            }
        }
        for &i in &nil {
            for &j in z_indices {
                r2 = r2.max(
                    self.bracket_unchecked(e(i).as_slice(), e(j).as_slice())
                        .max_abs(),
                );
            }
        }

        let mut r3: f64 = 0.0;
        for &i in v_indices {
            for &j in z_indices {
                r3 = r3.max(self.gram()[(i, j)].abs());
            }
        }

        let r4 = self.j_squared_residual(v_indices, z_indices)?;

        let mut r5: f64 = 0.0;
        for (indices, weight) in [(v_indices, 0.5), (z_indices, 1.0)] {
            for &i in indices {
                let mut diff = self.bracket_unchecked(a.as_slice(), e(i).as_slice());
                diff.axpy(-weight, &e(i));
                r5 = r5.max(self.norm(&diff)?);
            }
        }

        let two_step = self.is_two_step_nilpotent(&nil);
        let axioms = [r1, r2, r3, r4, r5].map(AxiomResult::new);
        Ok(DamekRicciReport {
            axiom_1: axioms[0],
            axiom_2: axioms[1],
            axiom_3: axioms[2],
            axiom_4: axioms[3],
            axiom_5: axioms[4],
            j_squared_residual: r4,
            is_two_step_nilpotent: two_step,
            overall: axioms.iter().all(|a| a.passed),
        })
    }

    /// `J_Z U`: the unique element of `v` with `<J_Z U, U'> = <Z, [U, U']>`
    /// for every `U'` in `v`.
    pub fn j_operator(
        &self,
        z: &CoefficientVector,
        u: &CoefficientVector,
        v_indices: &[usize],
    ) -> Result<CoefficientVector> {
        self.check_dim(z)?;
        self.check_dim(u)?;
        let n = self.dim();
        if v_indices.iter().any(|&i| i >= n) {
            return Err(GeometryError::BadPartition("index out of range".into()));
        }
        for k in 0..n {
            if !v_indices.contains(&k) && u[k] != 0.0 {
                return Err(GeometryError::SupportViolation(format!(
                    "U has a component outside v at index {k}"
                )));
            }
            if v_indices.contains(&k) && z[k] != 0.0 {
                return Err(GeometryError::SupportViolation(format!(
                    "Z has a component in v at index {k}"
                )));
            }
        }
        Ok(self.j_apply(z.as_slice(), u.as_slice(), v_indices))
    }

    fn j_apply(&self, z: &[f64], u: &[f64], v_indices: &[usize]) -> CoefficientVector {
        let n = self.dim();
        let m = v_indices.len();
        let rhs: Vec<f64> = v_indices
            .iter()
            .map(|&j| {
                let b = self.bracket_unchecked(u, CoefficientVector::basis(n, j).as_slice());
                self.inner_unchecked(z, b.as_slice())
            })
            .collect();
        let gv = nalgebra::DMatrix::from_fn(m, m, |r, c| self.gram()[(v_indices[r], v_indices[c])]);
        // v is a subspace of a positive-definite space, so gv is positive definite
        let sol = gv
            .cholesky()
            .expect("restricted Gram matrix is positive definite")
            .solve(&nalgebra::DVector::from_vec(rhs));
        let mut out = vec![0.0; n];
        for (r, &i) in v_indices.iter().enumerate() {
            out[i] = sol[r];
        }
        CoefficientVector::new(out)
    }

    fn j_squared_residual(&self, v_indices: &[usize], z_indices: &[usize]) -> Result<f64> {
        let n = self.dim();
        let z_frame = self.subspace_frame(z_indices);
        let mut centers: Vec<CoefficientVector> = z_frame.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_CENTER_SEED);
        for _ in 0..RANDOM_CENTER_SAMPLES {
            let mut z = CoefficientVector::zeros(n);
            for f in &z_frame {
                let g: f64 = StandardNormal.sample(&mut rng);
                z.axpy(g, f);
            }
            let norm = self.norm(&z)?;
            if norm > 0.0 {
                centers.push(z.scale(1.0 / norm));
            }
        }

        let mut worst: f64 = 0.0;
        for z in &centers {
            let zz = self.inner_unchecked(z.as_slice(), z.as_slice());
            for &i in v_indices {
                let u = CoefficientVector::basis(n, i);
                let ju = self.j_apply(z.as_slice(), u.as_slice(), v_indices);
                let mut jju = self.j_apply(z.as_slice(), ju.as_slice(), v_indices);
                jju.axpy(zz, &u);
                worst = worst.max(self.norm(&jju)?);
            }
        }
        Ok(worst)
    }

    // Gram-Schmidt frame of span{e_i : i in indices}.
    fn subspace_frame(&self, indices: &[usize]) -> Vec<CoefficientVector> {
        let n = self.dim();
        let mut frame: Vec<CoefficientVector> = Vec::new();
        for &i in indices {
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

    fn is_two_step_nilpotent(&self, nil: &[usize]) -> bool {
        let n = self.dim();
        let e = |i: usize| CoefficientVector::basis(n, i);
        let mut derived_nonzero = false;
        for &i in nil {
            for &j in nil {
                let b = self.bracket_unchecked(e(i).as_slice(), e(j).as_slice());
                if b.max_abs() > DR_TOL {
                    derived_nonzero = true;
                }
                for &k in nil {
                    if self
                        .bracket_unchecked(b.as_slice(), e(k).as_slice())
                        .max_abs()
                        > DR_TOL
                    {
                        return false;
                    }
                }
            }
        }
        derived_nonzero
    }

    fn check_partition(&self, v: &[usize], z: &[usize], a: usize) -> Result<()> {
        let n = self.dim();
        if v.is_empty() || z.is_empty() {
            return Err(GeometryError::BadPartition(
                "v and z must be non-empty".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &i in v.iter().chain(z).chain(std::iter::once(&a)) {
            if i >= n {
                return Err(GeometryError::BadPartition(format!(
                    "index {i} out of range 0..{n}"
                )));
            }
            if seen[i] {
                return Err(GeometryError::BadPartition(format!(
                    "index {i} listed twice"
                )));
            }
            seen[i] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(GeometryError::BadPartition(format!(
                "index {missing} not covered"
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::{h0, times_i, v, w, z0};
    use crate::engine::{from_matrix_basis, InnerProductKind};

    const V: [usize; 4] = [0, 1, 2, 3];
    const Z: [usize; 2] = [4, 5];

    fn dr7() -> MetricLieAlgebra {
        let basis = vec![
            v(),
            times_i(&v()),
            w(),
            times_i(&w()),
            z0(),
            times_i(&z0()),
            h0(),
        ];
        from_matrix_basis(&basis, InnerProductKind::Solvable).unwrap()
    }

    #[test]
    fn alpha_zero_algebra_passes() {
        let report = dr7().damek_ricci_check(&V, &Z, 6).unwrap();
        assert!(report.overall, "{report:?}");
        assert!(report.is_two_step_nilpotent);
        for a in report.axioms() {
            assert!(a.residual <= 1e-10);
        }
    }

    #[test]
    fn j_operator_matches_conjugation_rule() {
        let alg = dr7();
        let z = CoefficientVector::basis(7, 4);
        let e = |i| CoefficientVector::basis(7, i);
        let close = |a: &CoefficientVector, b: &CoefficientVector| (a - b).max_abs() < 1e-14;
        assert!(close(&alg.j_operator(&z, &e(0), &V).unwrap(), &e(2))); // J V = W
        assert!(close(
            &alg.j_operator(&z, &e(2), &V).unwrap(),
            &e(0).scale(-1.0)
        )); // J W = -V
        let jv = alg.j_operator(&z, &e(0), &V).unwrap();
        assert!(close(
            &alg.j_operator(&z, &jv, &V).unwrap(),
            &e(0).scale(-1.0)
        ));
    }

    #[test]
    fn j_operator_support_and_partition_errors() {
        let alg = dr7();
        let z = CoefficientVector::basis(7, 4);
        let not_v = CoefficientVector::basis(7, 6);
        assert!(matches!(
            alg.j_operator(&z, &not_v, &V),
            Err(GeometryError::SupportViolation(_))
        ));
        assert!(matches!(
            alg.damek_ricci_check(&[0, 1, 2], &Z, 6),
            Err(GeometryError::BadPartition(_))
        ));
        assert!(alg.damek_ricci_check(&V, &[4, 5, 6], 6).is_err());
        assert!(alg.damek_ricci_check(&V, &[4, 5], 9).is_err());
    }
}
