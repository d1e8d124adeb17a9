use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fock_core::classify::{classify, KernelOperator};
use fock_core::matrix::{build_matrix, default_outer, OperatorSpec};
use fock_core::numerics::{closed_range_witness, WitnessProfile, WITNESS_LEVEL};
use fock_core::symbol::AffineSymbol;
use fock_core::weight::EntireWeight;
use fock_core::{FockError, C64};
use serde::Serialize;

use crate::complex::parse_complex;
use crate::config::{OutputFormat, RunConfig};
use crate::error::{exit, CliError, CliResult};
use crate::format::{float, write_fockmat, write_matrix_csv, write_witness_csv};
use crate::report::{build_report, write_report};
use crate::verify::{run_suite, write_outcome, Suite};

#[derive(Debug, Parser)]
#[command(name = "fock", version, about = "Classify and numerically verify weighted composition operators on the Fock space")]
pub struct Cli {
    /// Inner truncation dimension N.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u16).range(4..=256))]
    pub inner_dim: u16,
    /// Fixed padding M − N for the first outer dimension (default: automatic).
    #[arg(long, global = true)]
    pub outer_pad: Option<usize>,
    /// Tolerance for residual checks.
    #[arg(long, global = true, default_value = "1e-8", value_parser = positive)]
    pub tol: f64,
    /// `||a| − 1|` at or below this counts as the unit circle.
    #[arg(long, global = true, default_value = "1e-12", value_parser = non_negative)]
    pub unit_circle_eps: f64,
    /// Compare the weight parameter with the critical value exactly.
    #[arg(long, global = true)]
    pub exact: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form verdicts with a numerical norm cross-check (JSON by default).
    Classify(OperatorArgs),
    /// Run a verification suite over the built-in parameter grid.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
    },
    /// Decay table of the closed-range witness g(r) (CSV by default).
    Witness {
        #[command(flatten)]
        op: OperatorArgs,
        #[arg(long, default_value_t = 10.0, value_parser = positive)]
        r_max: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Export the outer × inner truncated matrix (fockmat by default).
    Matrix {
        #[command(flatten)]
        op: OperatorArgs,
        /// Inner dimension N (default: --inner-dim).
        #[arg(long = "n")]
        n: Option<usize>,
        /// Outer dimension M (default: N plus padding).
        #[arg(long = "m")]
        m: Option<usize>,
    },
}

/// `ψ = γ·p(z)·K_c`, `φ(z) = az + b`. Literals: `1.5`, `0.5i`, `0.3-0.2i`.
#[derive(Debug, Clone, Args)]
pub struct OperatorArgs {
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = complex_arg)]
    pub gamma: C64,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = complex_arg)]
    pub c: C64,
    #[arg(long, allow_hyphen_values = true, value_parser = complex_arg)]
    pub a: C64,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = complex_arg)]
    pub b: C64,
    /// Polynomial factor p as comma-separated coefficients of 1, z, z², …
    #[arg(long, allow_hyphen_values = true, value_parser = poly_arg)]
    pub poly: Option<Poly>,
}

/// Monomial coefficients parsed from one comma-separated argument.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<C64>);

impl OperatorArgs {
    pub fn spec(&self) -> OperatorSpec {
        let poly = self.poly.clone().map_or_else(|| vec![C64::new(1.0, 0.0)], |p| p.0);
        OperatorSpec::new(EntireWeight::new(self.gamma, poly, self.c), AffineSymbol::new(self.a, self.b))
    }

    /// The operator as `γK_c`, or an unsupported-input error for other weights.
    pub fn kernel_operator(&self) -> CliResult<KernelOperator> {
        KernelOperator::from_spec(&self.spec()).map_err(|_| {
            CliError::Unsupported("only weights of the form gamma*K_c are classified; drop --poly".into())
        })
    }
}

fn complex_arg(s: &str) -> Result<C64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

fn poly_arg(s: &str) -> Result<Poly, String> {
    s.split(',').map(complex_arg).collect::<Result<_, _>>().map(Poly)
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a non-negative number")),
    }
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            inner_dim: self.inner_dim as usize,
            outer_pad: self.outer_pad,
            tol: self.tol,
            unit_circle_eps: self.unit_circle_eps,
            exact: self.exact,
            format: self.format,
            out: self.out.clone(),
        }
    }
}

fn open_output(cfg: &RunConfig) -> CliResult<Box<dyn Write>> {
    Ok(match &cfg.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[derive(Debug, Serialize)]
struct WitnessTable {
    alpha: f64,
    beta: f64,
    peak_r: f64,
    threshold: f64,
    first_below: Option<f64>,
    rows: Vec<WitnessJsonRow>,
}

#[derive(Debug, Serialize)]
struct WitnessJsonRow {
    r: f64,
    g: f64,
}

fn witness(op_args: &OperatorArgs, r_max: f64, steps: usize, cfg: &RunConfig) -> CliResult<i32> {
    if steps < 2 {
        return Err(CliError::Usage("--steps must be at least 2".into()));
    }
    let op = op_args.kernel_operator()?;
    let profile = match WitnessProfile::new(&op, cfg.unit_circle_eps) {
        Ok(p) => p,
        Err(FockError::WitnessUndefined) => {
            let r = classify(&op, &cfg.classify_options());
            return Err(CliError::Unsupported(format!(
                "the witness is defined only for |a| < 1; here |a| = 1 and the classifier decides closed_range = {}",
                r.closed_range
            )));
        }
        Err(FockError::ZeroWeight) => {
            return Err(CliError::Unsupported("gamma = 0: the zero operator has closed range {0}; no witness".into()))
        }
        Err(e) => return Err(e.into()),
    };
    let grid: Vec<f64> = (0..steps).map(|k| r_max * k as f64 / (steps - 1) as f64).collect();
    let rows = closed_range_witness(&op, &grid)?;
    let first_below = rows.iter().find(|row| row.g <= WITNESS_LEVEL).map(|row| row.r);
    let threshold = profile.threshold(WITNESS_LEVEL);
    let mut out = open_output(cfg)?;
    match cfg.format_or(OutputFormat::Csv) {
        OutputFormat::Csv => write_witness_csv(&mut out, &rows)?,
        OutputFormat::Text => {
            for row in &rows {
                writeln!(out, "{} {}", row.r, float(row.g))?;
            }
        }
        OutputFormat::Json => {
            let table = WitnessTable {
                alpha: profile.alpha,
                beta: profile.beta,
                peak_r: profile.peak_r,
                threshold,
                first_below,
                rows: rows.iter().map(|r| WitnessJsonRow { r: r.r, g: r.g }).collect(),
            };
            serde_json::to_writer_pretty(&mut out, &table)?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    match first_below {
        Some(r) => eprintln!("first r with g(r) <= 1e-12: {r} (predicted threshold r* = {threshold:.6})"),
        None => eprintln!("g(r) stays above 1e-12 up to r = {r_max}; predicted threshold r* = {threshold:.6}"),
    }
    Ok(exit::SUCCESS)
}

fn matrix(op_args: &OperatorArgs, n: Option<usize>, m: Option<usize>, cfg: &RunConfig) -> CliResult<i32> {
    let n = n.unwrap_or(cfg.inner_dim);
    let m = m.unwrap_or_else(|| match cfg.outer_pad {
        Some(pad) => n + pad,
        None => default_outer(n),
    });
    if n > 256 || m > 512 {
        eprintln!("warning: dimensions {m}×{n} exceed the desk-scale range; expect slow output and precision loss");
    }
    let format = cfg.format_or(OutputFormat::Text);
    if format == OutputFormat::Json {
        return Err(CliError::Usage("matrix output supports --format text (fockmat) or csv".into()));
    }
    let mat = build_matrix(&op_args.spec(), m, n)?;
    let mut out = open_output(cfg)?;
    match format {
        OutputFormat::Csv => write_matrix_csv(&mut out, mat.entries())?,
        _ => write_fockmat(&mut out, mat.entries())?,
    }
    out.flush()?;
    Ok(exit::SUCCESS)
}

fn dispatch(cli: &Cli) -> CliResult<i32> {
    let cfg = cli.config();
    match &cli.command {
        Command::Classify(args) => {
            let op = args.kernel_operator()?;
            let report = build_report(&op, &cfg)?;
            let mut out = open_output(&cfg)?;
            write_report(&mut out, &report, cfg.format_or(OutputFormat::Json))?;
            out.flush()?;
            Ok(exit::SUCCESS)
        }
        Command::Verify { suite } => {
            let outcome = run_suite(*suite, &cfg);
            let mut out = open_output(&cfg)?;
            write_outcome(&mut out, &outcome, cfg.format_or(OutputFormat::Text))?;
            out.flush()?;
            Ok(if outcome.all_passed() { exit::SUCCESS } else { exit::VERIFY_FAILED })
        }
        Command::Witness { op, r_max, steps } => witness(op, *r_max, *steps, &cfg),
        Command::Matrix { op, n, m } => matrix(op, *n, *m, &cfg),
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => exit::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
