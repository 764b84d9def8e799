use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::format::sig;
use super::{CliError, OutputFormat, SweepConfig, EXIT_OK, EXIT_VERIFY_FAILED};
use crate::hypersurface::{classify_with, CurvatureReport, Regime};

pub const CSV_HEADER: &str =
    "alpha,mean_curvature,cheeger,ricci_min,ricci_max,k_sigma,regime,minimal,einstein,horosphere_range,cross_residual";

const CSV_DIGITS: usize = 12;
/// Geometric columns below this magnitude are rounding noise around an exact
/// zero and print as `0` in CSV. Residuals are printed as computed.
const CSV_ZERO_SNAP: f64 = 1e-13;

fn csv_value(x: f64) -> String {
    sig(if x.abs() < CSV_ZERO_SNAP { 0.0 } else { x }, CSV_DIGITS)
}

/// One line of the sweep table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub mean_curvature: f64,
    pub cheeger: f64,
    pub ricci_min: f64,
    pub ricci_max: f64,
    pub k_sigma: f64,
    pub regime: Regime,
    pub minimal: bool,
    pub einstein: bool,
    pub horosphere_range: bool,
    pub cross_residual: f64,
}

impl From<CurvatureReport> for SweepRow {
    fn from(r: CurvatureReport) -> Self {
        Self {
            alpha: r.alpha,
            mean_curvature: r.mean_curvature,
            cheeger: r.cheeger,
            ricci_min: r.ricci_min,
            ricci_max: r.ricci_max,
            k_sigma: r.k_sigma,
            regime: r.regime,
            minimal: r.is_minimal,
            einstein: r.is_einstein,
            horosphere_range: r.is_horosphere_range,
            cross_residual: r.cross_pipeline_residual,
        }
    }
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        [
            csv_value(self.alpha),
            csv_value(self.mean_curvature),
            csv_value(self.cheeger),
            csv_value(self.ricci_min),
            csv_value(self.ricci_max),
            csv_value(self.k_sigma),
            self.regime.to_string(),
            self.minimal.to_string(),
            self.einstein.to_string(),
            self.horosphere_range.to_string(),
            sig(self.cross_residual, CSV_DIGITS),
        ]
        .join(",")
    }
}

/// Rows for every angle of `cfg`, computed in parallel and returned in angle order.
pub fn sweep_rows(cfg: &SweepConfig) -> crate::Result<Vec<SweepRow>> {
    cfg.alphas()
        .par_iter()
        .map(|&a| classify_with(a, cfg.samples, cfg.seed).map(SweepRow::from))
        .collect()
}

pub(super) fn cmd_sweep(cfg: &SweepConfig, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let rows = sweep_rows(cfg).map_err(|e| CliError::usage(e.to_string()))?;
    match cfg.format {
        OutputFormat::Csv => {
            let _ = writeln!(out, "{CSV_HEADER}");
            for row in &rows {
                let _ = writeln!(out, "{}", row.to_csv());
            }
        }
        OutputFormat::Json => {
            let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            let _ = writeln!(out, "{text}");
        }
    }
    let ok = rows.iter().all(|r| r.cross_residual <= cfg.tolerance);
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}
