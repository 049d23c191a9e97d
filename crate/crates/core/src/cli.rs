//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for usage, input and domain errors, 2 when a
//! numerical procedure fails to converge.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::chains::{chain_element, ChainIndex};
use crate::corpus;
use crate::dirichlet::{harmonic_conjugate, solve};
use crate::error::{Error, Result};
use crate::expr::Expr;
use crate::fourier::{coefficients, extended_coefficients, PrimitiveStack, RealSampler};
use crate::inner::{make_series, CoefficientSequence, RadiusSchedule};
use crate::io::{fmt_sci, read_coefficients, write_coefficients_json, BoundaryJson, Cell, Table};
use crate::point::{CirclePoint, DiskPoint};
use crate::singular::{eulerian_table, pair, GeneralizedFunction, TestFunction};

#[derive(Debug, Parser)]
#[command(name = "inner-analytic", version, about = "Functions on the circle as inner analytic functions on the disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON instead of CSV.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fourier coefficients k, alpha, beta of a boundary function.
    Coeffs(CoeffsArgs),
    /// Evaluate a coefficient series on a circle of radius rho.
    Synth(SynthArgs),
    /// Tabulate the inner function of a delta derivative.
    Delta(DeltaArgs),
    /// Print the triangle of Eulerian coefficients.
    Eulerian(EulerianArgs),
    /// Pair a test function with a delta derivative.
    Pair(PairArgs),
    /// Move along the chain of a coefficient series.
    Chain(ChainArgs),
    /// Solve the Dirichlet problem on a polar grid.
    Dirichlet(DirichletArgs),
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    /// Expression in t (sin, cos, +, -, *, numbers).
    #[arg(long, conflicts_with = "sampler")]
    pub expr: Option<String>,
    /// Named corpus function.
    #[arg(long)]
    pub sampler: Option<String>,
    /// Singular angles of an --expr function, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub singular: Vec<f64>,
    /// Number of coefficients.
    #[arg(long, default_value_t = 256)]
    pub k: usize,
    /// Quadrature nodes (power of two, at least 4K); defaults to max(4096, 4K).
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Treat the function as the n-th primitive and return extended coefficients.
    #[arg(long, default_value_t = 0)]
    pub primitive_order: u32,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Coefficient JSON file.
    #[arg(long)]
    pub coeffs: PathBuf,
    #[arg(long)]
    pub rho: f64,
    #[arg(long, default_value_t = 64)]
    pub ntheta: usize,
}

#[derive(Debug, Args)]
pub struct DeltaArgs {
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub theta1: f64,
    /// Radii, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0.5,0.9")]
    pub rho: Vec<f64>,
    #[arg(long, default_value_t = 16)]
    pub ntheta: usize,
}

#[derive(Debug, Args)]
pub struct EulerianArgs {
    #[arg(long)]
    pub nmax: usize,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Target kind; only "delta" is available.
    #[arg(long, default_value = "delta")]
    pub target: String,
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub theta1: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub weight: f64,
    /// Test function as an expression in t.
    #[arg(long)]
    pub g: String,
    #[arg(long, default_value_t = 1 << 16)]
    pub nodes: usize,
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    /// Coefficient JSON file.
    #[arg(long)]
    pub coeffs: PathBuf,
    /// Steps along the chain: positive for theta-derivatives, negative for primitives.
    #[arg(long, allow_hyphen_values = true)]
    pub index: i64,
}

#[derive(Debug, Args)]
pub struct DirichletArgs {
    /// Boundary JSON file.
    #[arg(long)]
    pub bc: PathBuf,
    /// rho_max,n_rho,n_theta
    #[arg(long, value_delimiter = ',', num_args = 1, default_value = "0.9,9,16")]
    pub grid: Vec<f64>,
    #[arg(long, default_value_t = 256)]
    pub k: usize,
    #[arg(long, default_value_t = 4096)]
    pub nodes: usize,
}

enum Output {
    Table(Table),
    Text(String),
    Coefficients(CoefficientSequence),
}

fn coefficient_table(seq: &CoefficientSequence) -> Table {
    let mut t = Table::new(vec!["k", "alpha", "beta"]);
    for k in 1..=seq.order() {
        t.push(vec![Cell::Int(k as i64), Cell::Float(seq.alpha(k)), Cell::Float(seq.beta(k))]);
    }
    t
}

fn grid_angles(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidArgument("ntheta must be positive".into()));
    }
    Ok((0..n).map(|j| -PI + 2.0 * PI * j as f64 / n as f64).collect())
}

fn run_coeffs(a: &CoeffsArgs, json: bool) -> Result<Output> {
    let f: RealSampler = match (&a.expr, &a.sampler) {
        (Some(e), _) => Expr::parse(e)?.into_sampler().with_singular_points(a.singular.iter().map(|&t| CirclePoint::new(t))),
        (None, Some(name)) => corpus::sampler(name).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown sampler {name:?}; known: {}", corpus::NAMES.join(", ")))
        })?,
        (None, None) => return Err(Error::InvalidArgument("give --expr or --sampler".into())),
    };
    let nodes = a.nodes.unwrap_or_else(|| (4 * a.k).next_power_of_two().max(4096));
    let seq = if a.primitive_order == 0 {
        coefficients(&f, a.k, nodes)?
    } else {
        extended_coefficients(&PrimitiveStack::new(f, a.primitive_order), a.k, nodes)?
    };
    Ok(if json { Output::Coefficients(seq) } else { Output::Table(coefficient_table(&seq)) })
}

fn run_synth(a: &SynthArgs) -> Result<Output> {
    let w = make_series(read_coefficients(&a.coeffs)?);
    let mut t = Table::new(vec!["theta", "rho", "re", "im"]);
    for theta in grid_angles(a.ntheta)? {
        let v = w.eval(DiskPoint::new(a.rho, theta)?);
        t.push(vec![Cell::Float(theta), Cell::Float(a.rho), Cell::Float(v.re), Cell::Float(v.im)]);
    }
    Ok(Output::Table(t))
}

fn run_delta(a: &DeltaArgs) -> Result<Output> {
    crate::singular::delta::check_order(a.n)?;
    let table = eulerian_table(a.n.saturating_sub(1) as usize)?;
    let t1 = CirclePoint::new(a.theta1);
    let mut t = Table::new(vec!["theta", "rho", "re", "im"]);
    for &rho in &a.rho {
        for theta in grid_angles(a.ntheta)? {
            let v = crate::singular::w_delta_n(a.n, t1, DiskPoint::new(rho, theta)?, &table)?;
            t.push(vec![Cell::Float(theta), Cell::Float(rho), Cell::Float(v.re), Cell::Float(v.im)]);
        }
    }
    Ok(Output::Table(t))
}

fn run_eulerian(a: &EulerianArgs, json: bool) -> Result<Output> {
    let table = eulerian_table(a.nmax)?;
    if json {
        let rows: Vec<Vec<String>> =
            (0..=a.nmax).map(|n| table.row(n).unwrap_or(&[]).iter().map(|v| v.to_string()).collect()).collect();
        let text = rows.iter().map(|r| format!("[{}]", r.join(","))).collect::<Vec<_>>().join(",");
        return Ok(Output::Text(format!("[{text}]\n")));
    }
    Ok(Output::Text(table.format_triangle()))
}

fn run_pair(a: &PairArgs, json: bool) -> Result<Output> {
    if a.target != "delta" {
        return Err(Error::InvalidArgument(format!("unknown target {:?}; only \"delta\" is available", a.target)));
    }
    let g = TestFunction::Sampler(Expr::parse(&a.g)?.into_sampler());
    let target = GeneralizedFunction::new(
        None,
        vec![crate::singular::DeltaTerm::new(a.n, CirclePoint::new(a.theta1), a.weight)],
    )?;
    let lim = pair(&g, &target, a.nodes, &RadiusSchedule::default())?;
    Ok(Output::Text(if json {
        format!("{{\"value\":{},\"error\":{}}}\n", fmt_sci(lim.value), fmt_sci(lim.error))
    } else {
        format!("value,error\n{},{}\n", fmt_sci(lim.value), fmt_sci(lim.error))
    }))
}

fn run_chain(a: &ChainArgs, json: bool) -> Result<Output> {
    let seq = read_coefficients(&a.coeffs)?;
    let seq = if a.index < 0 && seq.c0() != Complex64::default() {
        return Err(Error::NonZeroConstant { c0: seq.c0() });
    } else {
        seq
    };
    let out = chain_element(&make_series(seq), ChainIndex(a.index))?.coefficient_view()?;
    Ok(if json { Output::Coefficients(out) } else { Output::Table(coefficient_table(&out)) })
}

fn run_dirichlet(a: &DirichletArgs) -> Result<Output> {
    let [rho_max, n_rho, n_theta] = a.grid[..] else {
        return Err(Error::InvalidArgument("--grid takes rho_max,n_rho,n_theta".into()));
    };
    if !(0.0..1.0).contains(&rho_max) || n_rho < 1.0 || n_theta < 1.0 || n_rho.fract() != 0.0 || n_theta.fract() != 0.0 {
        return Err(Error::InvalidArgument(format!("bad grid {rho_max},{n_rho},{n_theta}")));
    }
    let text = std::fs::read_to_string(&a.bc).map_err(|e| Error::Io(format!("{}: {e}", a.bc.display())))?;
    let bc = BoundaryJson::parse(&text)?.into_condition()?;
    let field = solve(&bc, a.k, a.nodes)?;
    let mut t = Table::new(vec!["theta", "rho", "value", "conjugate"]);
    for i in 0..=n_rho as usize {
        let rho = rho_max * i as f64 / n_rho;
        for theta in grid_angles(n_theta as usize)? {
            let p = DiskPoint::new(rho, theta)?;
            let conj = harmonic_conjugate(&field, p).map(|c| c.series).unwrap_or_else(|_| field.w.eval(p).im);
            t.push(vec![Cell::Float(theta), Cell::Float(rho), Cell::Float(field.value(p)), Cell::Float(conj)]);
        }
    }
    Ok(Output::Table(t))
}

fn execute(cli: &Cli) -> Result<Output> {
    let json = cli.output.json;
    match &cli.command {
        Command::Coeffs(a) => run_coeffs(a, json),
        Command::Synth(a) => run_synth(a),
        Command::Delta(a) => run_delta(a),
        Command::Eulerian(a) => run_eulerian(a, json),
        Command::Pair(a) => run_pair(a, json),
        Command::Chain(a) => run_chain(a, json),
        Command::Dirichlet(a) => run_dirichlet(a),
    }
}

fn emit(output: &Output, json: bool, out: &mut dyn Write) -> Result<()> {
    match output {
        Output::Table(t) if json => t.write_json(out),
        Output::Table(t) => t.write_csv(out),
        Output::Text(s) => Ok(out.write_all(s.as_bytes())?),
        Output::Coefficients(c) => write_coefficients_json(c, out),
    }
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `stdout` (or the `--out` file) and diagnostics to `stderr`.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = execute(&cli).and_then(|output| match &cli.output.out {
        Some(path) => {
            let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            emit(&output, cli.output.json, &mut w)?;
            Ok(w.flush()?)
        }
        None => emit(&output, cli.output.json, stdout),
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_numeric_failure() { 2 } else { 1 }
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run_with(args, &mut out, &mut err);
    let _ = out.flush();
    code
}
