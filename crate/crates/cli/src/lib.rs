//! Command-line front end for `quiverkac-core`.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (bad quiver, mismatched
//! vectors, refused oracle work), 3 internal consistency failure, including any
//! disagreement under `--method both`.

pub mod commands;
pub mod formats;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quiverkac_core::DimVector;

pub use formats::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<quiverkac_core::error::Error> for CliError {
    fn from(e: quiverkac_core::error::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "quiverkac",
    version,
    about = "Kac polynomials, root and weight multiplicities, and Betti numbers of quiver varieties"
)]
pub struct Cli {
    /// Quiver JSON file, or a built-in name: a1, a2, a3, d4, kronecker<m>, triangle.
    #[arg(long, global = true)]
    pub quiver: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads; defaults to the number of processors.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kac polynomial of one dimension vector, or of every vector in a box.
    Kac(KacArgs),
    /// Root multiplicities by Peterson's recursion.
    Roots {
        #[arg(long, value_parser = formats::parse_vector)]
        bound: DimVector,
    },
    /// One weight multiplicity of an integrable highest-weight module.
    Weightmult {
        #[arg(long, value_parser = formats::parse_vector)]
        hw: DimVector,
        #[arg(long, value_parser = formats::parse_vector)]
        drop: DimVector,
        #[arg(long, value_enum, default_value_t = WeightMethod::Both)]
        method: WeightMethod,
    },
    /// All weight multiplicities down to a bound, from level-one root multiplicities.
    Character {
        #[arg(long, value_parser = formats::parse_vector)]
        hw: DimVector,
        #[arg(long, value_parser = formats::parse_vector)]
        bound: DimVector,
    },
    /// Betti numbers of the quiver variety M(v, w).
    Betti(BettiArgs),
    /// Brute-force counts over prime fields.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Runs the invariant suite on the built-in quivers.
    Selftest,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "target")]
pub struct KacTarget {
    #[arg(long, value_parser = formats::parse_vector)]
    pub dim: Option<DimVector>,
    /// Every dimension vector below this bound.
    #[arg(long, value_parser = formats::parse_vector)]
    pub all_upto: Option<DimVector>,
}

#[derive(Debug, Args)]
pub struct KacArgs {
    #[command(flatten)]
    pub target: KacTarget,
}

#[derive(Debug, Args)]
pub struct BettiArgs {
    /// Dimension vector; omit to sweep the whole `--bound` box.
    #[arg(long, value_parser = formats::parse_vector, required_unless_present = "bound")]
    pub v: Option<DimVector>,
    /// Framing vector.
    #[arg(long, value_parser = formats::parse_vector)]
    pub w: DimVector,
    #[arg(long, value_enum, default_value_t = BettiMethod::Both)]
    pub method: BettiMethod,
    /// Truncation box for the series computation; must contain `--v`.
    #[arg(long, value_parser = formats::parse_vector)]
    pub bound: Option<DimVector>,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Number of absolutely indecomposable representations over F_p.
    AiCount {
        #[arg(long, value_parser = formats::parse_vector)]
        dim: DimVector,
        #[arg(long)]
        p: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightMethod {
    /// Level-one root multiplicities of the framed quiver.
    #[value(name = "theorem1")]
    LevelOne,
    Freudenthal,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BettiMethod {
    Kac,
    Hausel,
    Both,
}

/// Outcome of a command: the report, plus an error when a cross-check failed
/// after the report was assembled.
pub struct Outcome {
    pub report: Report,
    pub failure: Option<CliError>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, failure: None }
    }
}

/// Parses `argv` (including the program name), runs the command, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return 1;
            }
            let _ = write!(out, "{rendered}");
            return 0;
        }
    };
    let result = match cli.jobs {
        None => execute(&cli),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Internal(format!("cannot start worker pool: {e}"))),
        },
    };
    match result {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => format!("{}\n", outcome.report.json),
                Format::Csv => outcome.report.to_csv(),
            };
            let _ = out.write_all(text.as_bytes());
            match outcome.failure {
                None => 0,
                Some(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    if let Command::Selftest = cli.command {
        return Ok(selftest::run());
    }
    let spec = cli.quiver.as_deref().ok_or_else(|| CliError::Usage("--quiver is required".into()))?;
    let quiver = formats::load_quiver(spec)?;
    commands::dispatch(&quiver, &cli.command)
}
