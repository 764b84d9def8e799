use std::io::Write;

use clap::ValueEnum;
use serde_json::json;

use super::{AlgebraArgs, CliError, EXIT_OK};
use crate::engine::{AlgebraDocument, MetricLieAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraOp {
    /// Ricci eigenvalues and the Ricci form in the given basis.
    Ricci,
    /// Cheeger constant and trace-form vector.
    Cheeger,
    /// Whether the Ricci eigenvalues agree within --tol, and their mean.
    Einstein,
    /// Damek-Ricci axioms for the split given by --v, --z and --a.
    DrCheck,
}

fn load(args: &AlgebraArgs) -> Result<MetricLieAlgebra, CliError> {
    let text = std::fs::read_to_string(&args.path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", args.path.display())))?;
    AlgebraDocument::from_json(&text)
        .and_then(AlgebraDocument::into_algebra)
        .map_err(|e| CliError::usage(format!("{}: {e}", args.path.display())))
}

pub(super) fn cmd_algebra(args: &AlgebraArgs, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let alg = load(args)?;
    let value = match args.op {
        AlgebraOp::Ricci => {
            let m = alg.ricci_matrix();
            let rows: Vec<Vec<f64>> = m.row_iter().map(|r| r.iter().copied().collect()).collect();
            json!({ "eigenvalues": alg.ricci_eigenvalues(), "ricci_form": rows })
        }
        AlgebraOp::Cheeger => json!({
            "cheeger": alg.cheeger(),
            "trace_form_vector": alg.trace_form_vector().as_slice(),
        }),
        AlgebraOp::Einstein => {
            if args.tolerance.is_nan() || args.tolerance <= 0.0 {
                return Err(CliError::usage("--tol must be positive"));
            }
            let (mean, spread) = alg.einstein_spread();
            json!({
                "einstein": spread <= args.tolerance,
                "constant": mean,
                "spread": spread,
                "tol": args.tolerance,
            })
        }
        AlgebraOp::DrCheck => {
            let a = args
                .a
                .ok_or_else(|| CliError::usage("dr-check needs --v, --z and --a"))?;
            if args.v.is_empty() || args.z.is_empty() {
                return Err(CliError::usage("dr-check needs --v, --z and --a"));
            }
            let report = alg
                .damek_ricci_check(&args.v, &args.z, a)
                .map_err(|e| CliError::usage(e.to_string()))?;
            serde_json::to_value(report).expect("report serializes")
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("value serializes");
    let _ = writeln!(out, "{text}");
    Ok(EXIT_OK)
}
