//! Machine-readable front end: transforms, partial sums, remainder decay and
//! kernel tables as CSV or JSON.
//!
//! Exit codes: 0 success, 2 configuration error, 3 numerical failure.
//! Angles are radians everywhere. Output is byte-identical across repeated
//! runs with the same configuration and seed.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fourier_circle::catalog::{self, CatalogEntry};
use fourier_circle::dirichlet::{self, RemainderOperator};
use fourier_circle::hilbert;
use fourier_circle::{Error, FourierCoefficients, PeriodicGrid, PvStrategy, SampledFunction};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Environment variable holding the default output directory for relative
/// `--output` paths.
const OUT_DIR_ENV: &str = "FOURIER_CIRCLE_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "fourier-circle",
    about = "Compact Hilbert transform, Fourier partial sums and remainder diagnostics on the circle",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the compact Hilbert transform of a function at given angles.
    Transform(TransformArgs),
    /// Fourier partial sums via the Dirichlet integral.
    PartialSums(PartialSumsArgs),
    /// Fourier remainders via the conjugate-Dirichlet integral.
    Remainders(RemaindersArgs),
    /// Tabulate one of the integration kernels.
    Kernel(KernelArgs),
    /// Sweep remainder magnitudes over orders and angles.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Subtraction,
    OffsetGrid,
}

impl StrategyArg {
    fn to_strategy(self) -> PvStrategy {
        match self {
            StrategyArg::Subtraction => PvStrategy::subtraction(),
            StrategyArg::OffsetGrid => PvStrategy::offset_grid(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct FunctionArgs {
    /// Catalog name (cos1..cos16, sin1..sin16, square, sawtooth, random) or
    /// path to a coefficient file with lines `k alpha_k beta_k`.
    #[arg(long)]
    function: String,

    /// Grid size (even, at least 4).
    #[arg(long)]
    n: usize,

    /// Series truncation for coefficient-file input; defaults to n/2 - 1.
    #[arg(long = "k-max")]
    k_max: Option<usize>,

    /// Seed for `--function random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Degree for `--function random`.
    #[arg(long, default_value_t = 16)]
    degree: usize,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Output file; stdout when omitted. Relative paths are resolved against
    /// $FOURIER_CIRCLE_OUT_DIR when that variable is set.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TransformArgs {
    #[command(flatten)]
    function: FunctionArgs,

    /// Evaluation angles, comma separated, radians.
    #[arg(long, value_delimiter = ',', required = true)]
    theta: Vec<f64>,

    #[arg(long, value_enum, default_value_t = StrategyArg::Subtraction)]
    strategy: StrategyArg,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct PartialSumsArgs {
    #[command(flatten)]
    function: FunctionArgs,

    /// Partial-sum orders, comma separated.
    #[arg(long = "N", value_delimiter = ',', required = true)]
    orders: Vec<usize>,

    #[arg(long, value_delimiter = ',', required = true)]
    theta: Vec<f64>,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct RemaindersArgs {
    #[command(flatten)]
    function: FunctionArgs,

    #[arg(long = "N", value_delimiter = ',', required = true)]
    orders: Vec<usize>,

    #[arg(long, value_delimiter = ',', required = true)]
    theta: Vec<f64>,

    #[arg(long, value_enum, default_value_t = StrategyArg::Subtraction)]
    strategy: StrategyArg,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KernelType {
    /// Compact Hilbert kernel (1/2pi) cot(delta/2).
    Hilbert,
    /// Dirichlet kernel (1/2pi) sin((N+1/2) delta) / sin(delta/2).
    Dirichlet,
    /// Conjugate Dirichlet kernel -(1/2pi) cos((N+1/2) delta) / sin(delta/2).
    ConjugateDirichlet,
    /// Remainder kernel, reduced single-difference integral form.
    Remainder,
}

#[derive(Debug, Args)]
struct KernelArgs {
    #[arg(long = "type", value_enum)]
    kernel_type: KernelType,

    /// Order N; ignored by the Hilbert kernel.
    #[arg(long = "N", default_value_t = 1)]
    order: usize,

    /// Angle differences, comma separated, radians.
    #[arg(long, value_delimiter = ',', required = true)]
    delta: Vec<f64>,

    /// Quadrature size for the remainder kernel.
    #[arg(long = "quadrature-n", default_value_t = dirichlet::DEFAULT_KERNEL_QUADRATURE)]
    quadrature_n: usize,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    function: FunctionArgs,

    /// Sweep orders, comma separated, strictly increasing.
    #[arg(long = "N", value_delimiter = ',', required = true)]
    orders: Vec<usize>,

    #[arg(long, value_delimiter = ',', required = true)]
    theta: Vec<f64>,

    #[arg(long, value_enum, default_value_t = StrategyArg::Subtraction)]
    strategy: StrategyArg,

    /// Verdict threshold for the final sup-remainder.
    #[arg(long, default_value_t = dirichlet::DEFAULT_SWEEP_THRESHOLD)]
    threshold: f64,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug)]
enum CliError {
    Config(String),
    Numerical(String),
}

impl CliError {
    fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::GridSize { .. }
            | Error::Aliasing { .. }
            | Error::Truncation { .. }
            | Error::RhoRange { .. }
            | Error::SweepOrder
            | Error::GoldenParse { .. } => CliError::Config(err.to_string()),
            Error::NonFiniteSample { .. }
            | Error::KernelSingularity { .. }
            | Error::NotZeroAverage { .. }
            | Error::Quadrature { .. } => CliError::Numerical(err.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            let first_line = err
                .to_string()
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ")
                .to_string();
            eprintln!("error: config: {first_line}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Config(msg)) => {
            eprintln!("error: config: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: numerical: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Transform(args) => {
            let s = prepare_samples(&args.function)?;
            let strategy = args.strategy.to_strategy();
            let mut table = Table::new(&["theta", "value"]);
            for &theta in &args.theta {
                let value = hilbert::transform_at(&s, theta, &strategy)?;
                table.push(vec![Field::Float(theta), Field::Float(value)]);
            }
            write_output(&args.output, &table)
        }
        Command::PartialSums(args) => {
            validate_orders(&args.orders)?;
            let s = prepare_samples(&args.function)?;
            let mut table = Table::new(&["N", "theta", "value"]);
            for &n_terms in &args.orders {
                for &theta in &args.theta {
                    let value = dirichlet::partial_sum(&s, n_terms, theta);
                    table.push(vec![
                        Field::Int(n_terms),
                        Field::Float(theta),
                        Field::Float(value),
                    ]);
                }
            }
            write_output(&args.output, &table)
        }
        Command::Remainders(args) => {
            validate_orders(&args.orders)?;
            let s = prepare_samples(&args.function)?;
            let op = RemainderOperator::new(&s, &args.strategy.to_strategy())?;
            let mut table = Table::new(&["N", "theta", "value"]);
            for &n_terms in &args.orders {
                for &theta in &args.theta {
                    table.push(vec![
                        Field::Int(n_terms),
                        Field::Float(theta),
                        Field::Float(op.apply(n_terms, theta)),
                    ]);
                }
            }
            write_output(&args.output, &table)
        }
        Command::Kernel(args) => {
            let mut table = Table::new(&["type", "N", "delta", "value"]);
            let type_name = match args.kernel_type {
                KernelType::Hilbert => "hilbert",
                KernelType::Dirichlet => "dirichlet",
                KernelType::ConjugateDirichlet => "conjugate-dirichlet",
                KernelType::Remainder => "remainder",
            };
            for &delta in &args.delta {
                let value = match args.kernel_type {
                    KernelType::Hilbert => hilbert::kernel(delta)?,
                    KernelType::Dirichlet => dirichlet::kernel(args.order, delta),
                    KernelType::ConjugateDirichlet => {
                        dirichlet::conjugate_kernel(args.order, delta)?
                    }
                    KernelType::Remainder => {
                        dirichlet::remainder_kernel(args.order, delta, args.quadrature_n)?
                    }
                };
                let shown_order = match args.kernel_type {
                    KernelType::Hilbert => 0,
                    _ => args.order,
                };
                table.push(vec![
                    Field::Str(type_name.to_string()),
                    Field::Int(shown_order),
                    Field::Float(delta),
                    Field::Float(value),
                ]);
            }
            write_output(&args.output, &table)
        }
        Command::Sweep(args) => {
            let s = prepare_samples(&args.function)?;
            let report = dirichlet::convergence_sweep(
                &s,
                &args.orders,
                &args.theta,
                &args.strategy.to_strategy(),
            )?
            .with_threshold(args.threshold);
            let mut table = Table::new(&["N", "theta", "abs_remainder"]);
            for (i, &n_terms) in report.orders.iter().enumerate() {
                for (t, &theta) in report.thetas.iter().enumerate() {
                    table.push(vec![
                        Field::Int(n_terms),
                        Field::Float(theta),
                        Field::Float(report.remainders[i][t]),
                    ]);
                }
            }
            write_output(&args.output, &table)
        }
    }
}

fn validate_orders(orders: &[usize]) -> Result<(), CliError> {
    if orders.contains(&0) {
        return Err(CliError::config("N values must be positive"));
    }
    Ok(())
}

/// Resolves the function argument, samples it on the grid and projects to
/// zero average.
fn prepare_samples(args: &FunctionArgs) -> Result<SampledFunction, CliError> {
    let grid = PeriodicGrid::new(args.n)?;
    let k_bound = args.n / 2 - 1;
    if let Some(k_max) = args.k_max {
        if k_max < 1 || k_max > k_bound {
            return Err(CliError::config(format!(
                "k-max must lie in 1..={k_bound} for n = {}",
                args.n
            )));
        }
    }
    let path = Path::new(&args.function);
    let entry = if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::config(format!("cannot read {}: {e}", path.display())))?;
        let fc = parse_coefficient_file(&text, args.k_max.unwrap_or(k_bound))?;
        return Ok(SampledFunction::sample(&grid, |t| fc.evaluate(t))?.project_zero_average());
    } else if args.function == "random" {
        if args.degree < 1 || args.degree > k_bound {
            return Err(CliError::config(format!(
                "degree must lie in 1..={k_bound} for n = {}",
                args.n
            )));
        }
        catalog::random_band_limited(args.seed, args.degree)
    } else {
        lookup_catalog(&args.function)?
    };
    Ok(entry.sample_on(&grid)?)
}

fn lookup_catalog(name: &str) -> Result<CatalogEntry, CliError> {
    catalog::find(name).ok_or_else(|| {
        CliError::config(format!(
            "unknown function '{name}' (expected cos1..cos16, sin1..sin16, square, sawtooth, random, or a coefficient file path)"
        ))
    })
}

/// Coefficient files: one line per harmonic, `k alpha_k beta_k`, ascending
/// k, missing k treated as zero. A k = 0 line sets alpha_0 (its beta column
/// must be 0). `#` starts a comment.
fn parse_coefficient_file(text: &str, k_max: usize) -> Result<FourierCoefficients, CliError> {
    let mut alpha0 = 0.0;
    let mut alpha = vec![0.0; k_max];
    let mut beta = vec![0.0; k_max];
    let mut last_k: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(CliError::config(format!(
                "coefficient file line {line}: expected `k alpha_k beta_k`"
            )));
        }
        let k: usize = fields[0]
            .parse()
            .map_err(|_| CliError::config(format!("coefficient file line {line}: bad k")))?;
        let a: f64 = fields[1]
            .parse()
            .map_err(|_| CliError::config(format!("coefficient file line {line}: bad alpha")))?;
        let b: f64 = fields[2]
            .parse()
            .map_err(|_| CliError::config(format!("coefficient file line {line}: bad beta")))?;
        if let Some(prev) = last_k {
            if k <= prev {
                return Err(CliError::config(format!(
                    "coefficient file line {line}: k values must be ascending"
                )));
            }
        }
        last_k = Some(k);
        if k == 0 {
            if b != 0.0 {
                return Err(CliError::config(format!(
                    "coefficient file line {line}: beta_0 must be 0"
                )));
            }
            alpha0 = a;
        } else if k <= k_max {
            alpha[k - 1] = a;
            beta[k - 1] = b;
        }
        // Harmonics above k_max are truncated away.
    }
    FourierCoefficients::from_parts(alpha0, alpha, beta).map_err(CliError::from)
}

enum Field {
    Int(usize),
    Float(f64),
    Str(String),
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Int(v) => v.to_string(),
            Field::Float(v) => v.to_string(),
            Field::Str(v) => v.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Field::Int(v) => serde_json::json!(v),
            Field::Float(v) => serde_json::json!(v),
            Field::Str(v) => serde_json::json!(v),
        }
    }
}

struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Field>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Field>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Field::csv).collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (name, field) in self.columns.iter().zip(row) {
                    obj.insert(name.to_string(), field.json());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&rows).expect("table serialises");
        text.push('\n');
        text
    }
}

fn write_output(args: &OutputArgs, table: &Table) -> Result<(), CliError> {
    let text = match args.format {
        FormatArg::Csv => table.to_csv(),
        FormatArg::Json => table.to_json(),
    };
    match &args.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let resolved = resolve_output_path(path);
            std::fs::write(&resolved, text)
                .map_err(|e| CliError::config(format!("cannot write {}: {e}", resolved.display())))
        }
    }
}

fn resolve_output_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(OUT_DIR_ENV) {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_file_parsing() {
        let fc = parse_coefficient_file("# comment\n0 0.5 0\n1 1.0 2.0\n3 0 4.0\n", 8).unwrap();
        assert_eq!(fc.alpha0(), 0.5);
        assert_eq!((fc.alpha(1), fc.beta(1)), (1.0, 2.0));
        assert_eq!((fc.alpha(2), fc.beta(2)), (0.0, 0.0));
        assert_eq!(fc.beta(3), 4.0);

        assert!(parse_coefficient_file("1 1 1\n1 2 2\n", 4).is_err());
        assert!(parse_coefficient_file("0 1 5\n", 4).is_err());
        assert!(parse_coefficient_file("1 x 0\n", 4).is_err());
        // Harmonics beyond k_max are dropped, not an error.
        let fc = parse_coefficient_file("1 1 0\n9 7 7\n", 4).unwrap();
        assert_eq!(fc.k_max(), 4);
    }

    #[test]
    fn csv_layout() {
        let mut table = Table::new(&["N", "theta", "value"]);
        table.push(vec![Field::Int(2), Field::Float(0.5), Field::Float(1.25)]);
        assert_eq!(table.to_csv(), "N,theta,value\n2,0.5,1.25\n");
    }

    #[test]
    fn json_mirrors_csv_columns() {
        let mut table = Table::new(&["theta", "value"]);
        table.push(vec![Field::Float(0.5), Field::Float(-1.0)]);
        let parsed: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
        assert_eq!(parsed[0]["theta"], 0.5);
        assert_eq!(parsed[0]["value"], -1.0);
    }
}
