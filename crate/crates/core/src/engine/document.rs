//! JSON form of a metric Lie algebra:
//!
//! ```json
//! {"dim": 2, "labels": ["A", "X"], "structure": [[0, 1, 1, 1.0]], "gram": [[1, 0], [0, 1]]}
//! ```
//!
//! `structure` is sparse and lists only entries with `i < j`; the `j > i`
//! entries follow from antisymmetry.

use serde::{Deserialize, Serialize};

use super::MetricLieAlgebra;
use crate::error::{GeometryError, Result};

/// Coefficients at or below this magnitude are omitted when serializing.
const SPARSE_DROP_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub structure: Vec<(usize, usize, usize, f64)>,
    pub gram: Vec<Vec<f64>>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| GeometryError::InvalidAlgebra(format!("parse error: {e}")))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra document serializes")
    }

    pub fn from_algebra(alg: &MetricLieAlgebra) -> Self {
        let n = alg.dim();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let c = alg.structure_constant(i, j, k);
                    if c.abs() > SPARSE_DROP_TOL {
                        structure.push((i, j, k, c));
                    }
                }
            }
        }
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let g = alg.gram()[(i, j)];
                        if g.abs() > SPARSE_DROP_TOL {
                            g
                        } else {
                            0.0
                        }
                    })
                    .collect()
            })
            .collect();
        Self {
            dim: n,
            labels: alg.labels().map(<[String]>::to_vec),
            structure,
            gram,
        }
    }

    /// Validates the document and builds the algebra, reporting the first
    /// violated invariant.
    pub fn into_algebra(self) -> Result<MetricLieAlgebra> {
        let n = self.dim;
        if n == 0 {
            return Err(GeometryError::InvalidAlgebra(
                "dimension must be positive".into(),
            ));
        }
        if self.gram.len() != n || self.gram.iter().any(|row| row.len() != n) {
            return Err(GeometryError::InvalidAlgebra(format!(
                "gram must be a {n}x{n} array"
            )));
        }
        let mut structure = vec![0.0; n * n * n];
        let mut filled = vec![false; n * n * n];
        for &(i, j, k, c) in &self.structure {
            if i >= n || j >= n || k >= n {
                return Err(GeometryError::InvalidAlgebra(format!(
                    "structure entry [{i}, {j}, {k}] out of range 0..{n}"
                )));
            }
            if i >= j {
                return Err(GeometryError::InvalidAlgebra(format!(
                    "structure entry [{i}, {j}, {k}] must have i < j"
                )));
            }
            let at = (i * n + j) * n + k;
            if filled[at] {
                return Err(GeometryError::InvalidAlgebra(format!(
                    "structure entry [{i}, {j}, {k}] listed twice"
                )));
            }
            filled[at] = true;
            structure[at] = c;
            structure[(j * n + i) * n + k] = -c;
        }
        let gram = self.gram.into_iter().flatten().collect();
        MetricLieAlgebra::new(n, structure, gram, self.labels)
    }
}
