//! `infbranch`: infinity branches and asymptotic comparison of plane curves.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use infbranch_core::{
    hausdorff_estimate, infinity_branches, infinity_points, parse_polynomial, prepare_pair,
    puiseux::parse_exponent, same_asymptotic_behavior, sample_leaf, branches::normalize_input,
    BivariatePolynomial, CompareConfig, Error, Exponent, Verdict,
};

#[derive(Parser)]
#[command(name = "infbranch", version, about = "Infinity branches of implicit plane algebraic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the points at infinity (1:m:0) with multiplicities.
    Points(CurveArgs),
    /// Compute every infinity branch r(z) up to the requested exponent.
    Branches(CurveArgs),
    /// Decide whether two curves have the same asymptotic behavior.
    Compare(CurveArgs),
    /// Emit points (z, r(z)) of one leaf as CSV.
    Sample {
        #[command(flatten)]
        args: CurveArgs,
        /// Branch index, as listed by `branches`.
        #[arg(long, default_value_t = 0)]
        branch: usize,
        /// Leaf index within the branch.
        #[arg(long, default_value_t = 0)]
        leaf: u32,
        /// Argument of the sample points z = radius * exp(i * angle).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        angle: f64,
    },
    /// Discrete Hausdorff estimate between two curves over x in [-R, R].
    Hausdorff(CurveArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CurveArgs {
    /// Curve text, e.g. "y^2 - x". Comparison commands take two.
    curves: Vec<String>,
    #[arg(long = "curve-a")]
    curve_a: Option<String>,
    #[arg(long = "curve-b")]
    curve_b: Option<String>,
    /// Read curve text from a file; may be repeated.
    #[arg(long = "curve-file")]
    curve_file: Vec<PathBuf>,
    /// Root-finder tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Relative tolerance when comparing coefficients.
    #[arg(long = "compare-tol", default_value_t = 1e-6)]
    compare_tol: f64,
    /// Smallest exponent of r(z) to compute, as p/q.
    #[arg(long = "min-exponent", default_value = "-2", allow_hyphen_values = true)]
    min_exponent: String,
    /// Sampling radii.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    radii: Vec<f64>,
    /// Number of x grid points for the Hausdorff estimate.
    #[arg(long, default_value_t = 64)]
    grid: usize,
    /// Half-widths R of the Hausdorff window.
    #[arg(long, value_delimiter = ',', default_value = "20")]
    window: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

/// Failure with its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidArgument(_) => 2,
            Error::Degenerate(_) => 3,
            Error::Expansion(_) | Error::Root(_) | Error::InsufficientTruncation { .. } | Error::AmbiguousPoints(_) => 4,
            Error::EmptySample(_) => 6,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Setup {
    config: CompareConfig,
    curves: Vec<BivariatePolynomial>,
}

impl CurveArgs {
    fn setup(&self, wanted: usize) -> Result<Setup, Failure> {
        if !(self.tol > 0.0) {
            return Err(usage("--tol must be positive"));
        }
        if !(self.compare_tol >= self.tol) {
            return Err(usage("--compare-tol must be at least --tol"));
        }
        let min_exponent: Exponent = parse_exponent(&self.min_exponent)?;
        if min_exponent > Exponent::from_integer(0) {
            return Err(usage("--min-exponent must be <= 0"));
        }
        let mut texts: Vec<String> = Vec::new();
        texts.extend(self.curve_a.iter().cloned());
        texts.extend(self.curve_b.iter().cloned());
        texts.extend(self.curves.iter().cloned());
        for path in &self.curve_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            texts.push(text.trim().to_string());
        }
        if texts.len() != wanted {
            return Err(usage(format!("expected {wanted} curve(s), got {}", texts.len())));
        }
        let curves = texts
            .iter()
            .map(|t| parse_polynomial(t).map_err(|e| Failure::from(Error::from(e))))
            .collect::<Result<_, _>>()?;
        Ok(Setup {
            config: CompareConfig {
                tol: self.tol,
                compare_tol: self.compare_tol,
                min_exponent,
                ..CompareConfig::default()
            },
            curves,
        })
    }
}

/// Square-free part, then the shear that keeps (0:1:0) off the curve.
fn prepared(f: &BivariatePolynomial) -> Result<(BivariatePolynomial, u32), Failure> {
    let p = prepare_pair(&normalize_input(f)?, None)?;
    Ok((p.first, p.lambda))
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    match cli.command {
        Command::Points(args) => {
            let s = args.setup(1)?;
            let (f, lambda) = prepared(&s.curves[0])?;
            let points = infinity_points(&f, &s.config.root_config())?;
            Ok((render::points(&points.points, lambda, args.format), 0))
        }
        Command::Branches(args) => {
            let s = args.setup(1)?;
            let (f, lambda) = prepared(&s.curves[0])?;
            let branches = infinity_branches(&f, &s.config.branch_options())?;
            Ok((render::branches(&branches, lambda, args.format), 0))
        }
        Command::Compare(args) => {
            let s = args.setup(2)?;
            let report = same_asymptotic_behavior(&s.curves[0], &s.curves[1], &s.config)?;
            let code = match report.verdict {
                Verdict::Same => 0,
                Verdict::Different => 1,
            };
            Ok((render::report(&report, args.format), code))
        }
        Command::Sample { args, branch, leaf, angle } => {
            let s = args.setup(1)?;
            let (f, _) = prepared(&s.curves[0])?;
            let branches = infinity_branches(&f, &s.config.branch_options())?;
            let selector = |message: String| Failure { code: 5, message };
            let b = branches
                .get(branch)
                .ok_or_else(|| selector(format!("branch {branch} out of range; the curve has {}", branches.len())))?;
            let l = b.leaf(leaf).map_err(|e| selector(e.to_string()))?;
            let rows = sample_leaf(&l, &args.radii, angle)?;
            Ok((render::samples(&rows, leaf, args.format), 0))
        }
        Command::Hausdorff(args) => {
            let s = args.setup(2)?;
            let estimates = args
                .window
                .iter()
                .map(|&r| hausdorff_estimate(&s.curves[0], &s.curves[1], r, args.grid, &s.config).map(|h| (r, h)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((render::hausdorff(&estimates, args.grid, args.format), 0))
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
