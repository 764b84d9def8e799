//! Command-line front end for the `sl3c` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

mod algebra;
mod foliation;
pub mod format;
mod sweep;
mod verify;

use std::f64::consts::FRAC_PI_2;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use algebra::AlgebraOp;
pub use sweep::{sweep_rows, SweepRow, CSV_HEADER};
pub use verify::{run_checks, CheckOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sl3c",
    version,
    about = "Curvature of the homogeneous hypersurfaces of SL(3,C)/SU(3)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Read angles in degrees instead of radians.
    #[arg(long, global = true)]
    pub degrees: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate mean curvature, Cheeger constant and Ricci data over an angle range.
    Sweep(SweepArgs),
    /// Run every cross-check and print one PASS/FAIL line per check.
    Verify(SweepArgs),
    /// Flow a group element along the normal direction and report the leaf identification.
    Foliation(FoliationArgs),
    /// Evaluate a metric Lie algebra given as JSON.
    Algebra(AlgebraArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// First angle (radians, or `pi/3` style; degrees with --degrees).
    #[arg(long, default_value = "0", value_parser = format::parse_angle, allow_hyphen_values = true)]
    pub alpha_start: f64,
    /// Last angle.
    #[arg(long, default_value = "pi/2", value_parser = format::parse_angle, allow_hyphen_values = true)]
    pub alpha_end: f64,
    /// Number of evenly spaced angles, endpoints included.
    #[arg(long, default_value_t = 7)]
    pub steps: usize,
    /// Random vectors or planes per check.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Largest acceptable cross-pipeline residual.
    #[arg(long = "tol", default_value_t = 1e-10, allow_hyphen_values = true)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

/// Validated sweep parameters, angles in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub alpha_start: f64,
    pub alpha_end: f64,
    pub steps: usize,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub format: OutputFormat,
}

impl SweepConfig {
    pub fn from_args(args: &SweepArgs, degrees: bool) -> Result<Self, String> {
        let cfg = Self {
            alpha_start: format::to_radians(args.alpha_start, degrees),
            alpha_end: format::to_radians(args.alpha_end, degrees),
            steps: args.steps,
            samples: args.samples,
            seed: args.seed,
            tolerance: args.tolerance,
            format: args.format,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, a) in [
            ("--alpha-start", self.alpha_start),
            ("--alpha-end", self.alpha_end),
        ] {
            if !(0.0..=FRAC_PI_2).contains(&a) {
                return Err(format!("{name} must lie in [0, pi/2], got {a}"));
            }
        }
        if self.alpha_start > self.alpha_end {
            return Err("--alpha-start must not exceed --alpha-end".into());
        }
        if self.steps == 0 {
            return Err("--steps must be at least 1".into());
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err("--tol must be positive".into());
        }
        Ok(())
    }

    /// The sweep angles; the last one is exactly `alpha_end`.
    pub fn alphas(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.alpha_start];
        }
        let span = self.alpha_end - self.alpha_start;
        let last = self.steps - 1;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.alpha_end
                } else {
                    self.alpha_start + span * i as f64 / last as f64
                }
            })
            .collect()
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_start: 0.0,
            alpha_end: FRAC_PI_2,
            steps: 7,
            samples: 1000,
            seed: 42,
            tolerance: 1e-10,
            format: OutputFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct FoliationArgs {
    #[arg(long, default_value = "0", value_parser = format::parse_angle, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Flow time.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub s: f64,
    /// Point of the leaf as `x_re,x_im,y_re,y_im,z_re,z_im,t`.
    #[arg(long, default_value = "0,0,0,0,0,0,0", allow_hyphen_values = true)]
    pub q: String,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// JSON file describing the algebra.
    pub path: PathBuf,
    #[arg(value_enum)]
    pub op: AlgebraOp,
    /// Basis indices spanning v (dr-check), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub v: Vec<usize>,
    /// Basis indices spanning z (dr-check), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub z: Vec<usize>,
    /// Basis index of the A direction (dr-check).
    #[arg(long)]
    pub a: Option<usize>,
    /// Eigenvalue spread accepted as Einstein.
    #[arg(long = "tol", default_value_t = 1e-10)]
    pub tolerance: f64,
}

/// Error carrying the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            if e.code == EXIT_USAGE {
                eprintln!("\nFor usage, try 'sl3c --help'.");
            }
            e.code
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let to_terminal = cli.output.is_none() && io::stdout().is_terminal();
    let color = to_terminal && std::env::var_os("NO_COLOR").is_none();
    let mut buf: Vec<u8> = Vec::new();
    let code = match &cli.command {
        Command::Sweep(args) => {
            let cfg = SweepConfig::from_args(args, cli.degrees).map_err(CliError::usage)?;
            sweep::cmd_sweep(&cfg, &mut buf)?
        }
        Command::Verify(args) => {
            let cfg = SweepConfig::from_args(args, cli.degrees).map_err(CliError::usage)?;
            verify::cmd_verify(&cfg, color, &mut buf)?
        }
        Command::Foliation(args) => foliation::cmd_foliation(args, cli.degrees, &mut buf)?,
        Command::Algebra(args) => algebra::cmd_algebra(args, &mut buf)?,
    };
    emit(cli.output.as_ref(), &buf)?;
    Ok(code)
}

fn emit(path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    let result = match path {
        Some(p) => File::create(p).and_then(|mut f| f.write_all(bytes)),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush())
        }
    };
    result.map_err(|e| CliError::usage(format!("cannot write output: {e}")))
}
