use super::{CoefficientVector, MetricLieAlgebra};

impl MetricLieAlgebra {
    /// The covector `X -> Tr(ad X)` in basis coordinates, `tau_i = sum_j c[i][j][j]`.
    pub fn trace_covector(&self) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.structure_constant(i, j, j)).sum())
            .collect()
    }

    /// The vector `H_Q` with `<H_Q, X> = Tr(ad X)` for all `X`.
    pub fn trace_form_vector(&self) -> CoefficientVector {
        self.raise(&self.trace_covector())
    }

    /// `max { Tr(ad X) : |X| = 1 }`, which is the metric norm of
    /// [`Self::trace_form_vector`] because the functional is linear.
    ///
    /// As a Cheeger constant this is only meaningful for solvable algebras.
    pub fn cheeger(&self) -> f64 {
        let tau = self.trace_covector();
        let g_inv = self.gram_inverse();
        let n = self.dim();
        let mut q = 0.0;
        for i in 0..n {
            for j in 0..n {
                q += tau[i] * g_inv[(i, j)] * tau[j];
            }
        }
        q.max(0.0).sqrt()
    }
}
