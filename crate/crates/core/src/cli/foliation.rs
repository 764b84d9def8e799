use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use super::{format, CliError, FoliationArgs, EXIT_OK};
use crate::hypersurface::{
    check_alpha, flow_point, foliation_residual, leaf_conjugate, volume_distortion, GroupElement,
};

#[derive(Debug, Serialize)]
struct FoliationOutput {
    alpha: f64,
    s: f64,
    q: GroupElement,
    flow_point: GroupElement,
    leaf_conjugate: GroupElement,
    volume_distortion: f64,
    residual: f64,
}

/// Parses `x_re,x_im,y_re,y_im,z_re,z_im,t`.
fn parse_point(text: &str, alpha: f64) -> Result<GroupElement, CliError> {
    let values: Vec<f64> = text
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::usage(format!("invalid --q '{text}': {e}")))?;
    if values.len() != 7 {
        return Err(CliError::usage(format!(
            "--q needs 7 comma-separated values (x_re,x_im,y_re,y_im,z_re,z_im,t), got {}",
            values.len()
        )));
    }
    let q = GroupElement::on_leaf(
        alpha,
        Complex64::new(values[0], values[1]),
        Complex64::new(values[2], values[3]),
        Complex64::new(values[4], values[5]),
        values[6],
    );
    if !q.is_finite() {
        return Err(CliError::usage("--q coordinates must be finite"));
    }
    Ok(q)
}

pub(super) fn cmd_foliation(
    args: &FoliationArgs,
    degrees: bool,
    out: &mut Vec<u8>,
) -> Result<i32, CliError> {
    let alpha = format::to_radians(args.alpha, degrees);
    check_alpha(alpha).map_err(|e| CliError::usage(e.to_string()))?;
    if !args.s.is_finite() {
        return Err(CliError::usage("--s must be finite"));
    }
    let q = parse_point(&args.q, alpha)?;
    let geometry = |e: crate::GeometryError| CliError::usage(e.to_string());
    let report = FoliationOutput {
        alpha,
        s: args.s,
        q,
        flow_point: flow_point(&q, args.s),
        leaf_conjugate: leaf_conjugate(&q, args.s).map_err(geometry)?,
        volume_distortion: volume_distortion(alpha, args.s),
        residual: foliation_residual(&q, args.s).map_err(geometry)?,
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes");
    let _ = writeln!(out, "{text}");
    Ok(EXIT_OK)
}
