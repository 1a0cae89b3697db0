//! `randext`: tables, samples, estimates and oracle checks for extremes of a
//! random number of i.i.d. `[0, 1]` variables.
//!
//! Tables and samples are written as CSV, estimates and check reports as
//! JSON, to stdout or `--out`. Exit codes: 0 success, 1 usage or validation
//! error, 2 numerical failure (including a failed `check`).

pub mod check;
pub mod model;
pub mod samples;
pub mod table;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use randext_core::estimation::{
    csug_mle, moment_inversion, sug_mle_numeric, EstimateResult, ModelFamily,
};
use randext_core::{Catalogue, ClosedFormModel, ExtremeLaw, Params, RandomSource, Tolerance};
use serde::Serialize;

use crate::check::{check, CheckReport};
use crate::model::{ModelArgs, Resolved};
use crate::table::{num, parse_grid, parse_list, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Model(#[from] randext_core::Error),
    #[error("check failed for {failed} of {total} models")]
    CheckFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Model(e) if e.is_numerical() => 2,
            CliError::CheckFailed { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "randext",
    version,
    about = "Extremes of a random number of i.i.d. [0,1] variables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Density on a grid
    Pdf(GridArgs),
    /// Distribution function on a grid
    Cdf(GridArgs),
    /// Raw moments E(X^k), k = 1..k-max, by quadrature
    Moments {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moment generating function on a grid of t values
    Mgf {
        #[command(flatten)]
        model: ModelArgs,
        /// t grid as start:stop:step
        #[arg(long, default_value = "-2:2:1", allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded draws, one per line
    Sample {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate theta for sug-* or csug-* from a sample file
    Estimate {
        #[arg(long)]
        model: String,
        #[arg(long, value_enum, default_value_t = Method::Mle)]
        method: Method,
        /// File of values in [0, 1], comma- or newline-separated
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Oracle cross-check report; without a model, every catalogue entry on
    /// the default parameter grid
    Check {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Monte Carlo draws per model
        #[arg(long, default_value_t = 100_000)]
        mc_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Density curves for several theta values over the model's support
    Figure {
        #[arg(long, value_enum)]
        name: FigureName,
        /// Comma-separated theta values
        #[arg(long, default_value = "0.2,0.5,0.8")]
        thetas: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
struct GridArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// x grid as start:stop:step, inclusive
    #[arg(long, default_value = "0:1:0.01", allow_hyphen_values = true)]
    grid: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Mle,
    Moment,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureName {
    SugMax,
    SugMin,
    CsugMax,
    CsugMin,
}

impl FigureName {
    fn entry(self) -> Catalogue {
        match self {
            FigureName::SugMax => Catalogue::SugMax,
            FigureName::SugMin => Catalogue::SugMin,
            FigureName::CsugMax => Catalogue::CsugMax,
            FigureName::CsugMin => Catalogue::CsugMin,
        }
    }
}

pub const FIGURE_POINTS: usize = 501;

/// Runs the command line against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "randext: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Pdf(args) => grid_table(args, "pdf", out),
        Command::Cdf(args) => grid_table(args, "cdf", out),
        Command::Moments {
            model,
            k_max,
            out: path,
        } => {
            let m = model.resolve()?;
            if k_max == 0 {
                return Err(CliError::Invalid("--k-max must be at least 1".into()));
            }
            let mut t = metadata(Table::new(&["k", "moment"]), &m, "moments");
            for k in 1..=k_max {
                t.push(vec![k.to_string(), num(m.law().moment(k)?)]);
            }
            emit(path, &t.render(), out)
        }
        Command::Mgf {
            model,
            grid,
            out: path,
        } => {
            let m = model.resolve()?;
            let mut t = metadata(Table::new(&["t", "mgf"]), &m, "mgf");
            for s in parse_grid(&grid)? {
                t.push(vec![num(s), num(m.law().mgf(s)?)]);
            }
            emit(path, &t.render(), out)
        }
        Command::Sample {
            model,
            n,
            seed,
            out: path,
        } => {
            let m = model.resolve()?;
            let mut src = RandomSource::new(seed, 0);
            let mut t = Table::new(&["value"])
                .meta("model", m)
                .meta("operation", "sample")
                .meta("n", n)
                .meta("seed", seed)
                .meta("stream", 0);
            for _ in 0..n {
                t.push(vec![num(m.law().sample(&mut src))]);
            }
            emit(path, &t.render(), out)
        }
        Command::Estimate {
            model,
            method,
            input,
            out: path,
        } => {
            let entry: Catalogue = model.parse().map_err(CliError::Invalid)?;
            let sample = samples::read_sample(&input)?;
            let family = match entry {
                Catalogue::SugMax | Catalogue::SugMin => ModelFamily::Sug,
                Catalogue::CsugMax | Catalogue::CsugMin => ModelFamily::Csug,
                other => {
                    return Err(CliError::Invalid(format!(
                        "estimation is available for sug-max, sug-min, csug-max and csug-min, not {other}"
                    )))
                }
            };
            let kind = entry.kind();
            let result = match (method, family) {
                (Method::Mle, ModelFamily::Csug) => csug_mle(kind, &sample)?,
                (Method::Mle, ModelFamily::Sug) => sug_mle_numeric(kind, &sample)?,
                (Method::Moment, _) => moment_inversion(kind, family, sample.mean())?,
            };
            let report = EstimateReport::new(entry, sample.len(), result);
            emit(path, &json(&report), out)
        }
        Command::Check {
            model,
            seed,
            mc_n,
            out: path,
        } => {
            if mc_n < 2 {
                return Err(CliError::Invalid("--mc-n must be at least 2".into()));
            }
            let models = model.resolve_grid()?;
            let reports: Vec<CheckReport> = models
                .iter()
                .enumerate()
                .map(|(stream, m)| check(m, mc_n, seed, stream as u64))
                .collect();
            let failed = reports.iter().filter(|r| !r.pass).count();
            let summary = CheckSummary {
                pass: failed == 0,
                reports,
            };
            emit(path, &json(&summary), out)?;
            if failed > 0 {
                return Err(CliError::CheckFailed {
                    failed,
                    total: models.len(),
                });
            }
            Ok(())
        }
        Command::Figure {
            name,
            thetas,
            out: path,
        } => {
            let thetas = parse_list(&thetas)?;
            let mut t = Table::new(&["theta", "x", "pdf"])
                .meta("figure", name.entry())
                .meta("points_per_curve", FIGURE_POINTS);
            for theta in thetas {
                let m = ClosedFormModel::new(name.entry(), Params::theta(theta))?;
                let (lo, hi) = m.support();
                for i in 0..FIGURE_POINTS {
                    let x = if i + 1 == FIGURE_POINTS {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / (FIGURE_POINTS - 1) as f64
                    };
                    t.push(vec![num(theta), num(x), num(m.cf_pdf(x))]);
                }
            }
            emit(path, &t.render(), out)
        }
    }
}

fn metadata(t: Table, m: &Resolved, operation: &str) -> Table {
    let tol = Tolerance::default();
    t.meta("model", m).meta("operation", operation).meta(
        "tolerance",
        format!("abs={:e} rel={:e}", tol.abs_tol, tol.rel_tol),
    )
}

fn grid_table(args: GridArgs, operation: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let m = args.model.resolve()?;
    let xs = parse_grid(&args.grid)?;
    if xs.iter().any(|x| !(0.0..=1.0).contains(x)) {
        return Err(CliError::Invalid(format!(
            "grid '{}' leaves [0, 1]",
            args.grid
        )));
    }
    let mut t = metadata(Table::new(&["x", operation]), &m, operation);
    for x in xs {
        let v = match operation {
            "pdf" => m.law().pdf(x)?,
            _ => m.law().cdf(x)?,
        };
        t.push(vec![num(x), num(v)]);
    }
    emit(args.out, &t.render(), out)
}

#[derive(Debug, Serialize)]
struct CheckSummary {
    pass: bool,
    reports: Vec<CheckReport>,
}

#[derive(Debug, Serialize)]
struct EstimateReport {
    model: String,
    n: usize,
    method: String,
    theta_hat: f64,
    loglik: Option<f64>,
    evals: usize,
    near_boundary: bool,
}

impl EstimateReport {
    fn new(entry: Catalogue, n: usize, r: EstimateResult) -> Self {
        Self {
            model: entry.to_string(),
            n,
            method: r.method.to_string(),
            theta_hat: r.theta_hat,
            loglik: r.loglik,
            evals: r.evals,
            near_boundary: r.near_boundary,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn emit(path: Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(&path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}
