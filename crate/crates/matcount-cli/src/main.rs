//! `matcount`: count, enumerate and verify 0/1 matrices with a fixed number
//! of ones per column and full row coverage.
//!
//! Exit codes: 0 success / all identities match, 1 verification mismatch,
//! 2 usage error, 3 brute-force cap refusal, 4 I/O error.

mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

use matcount::enumerate::DEFAULT_CAP;

#[derive(Parser)]
#[command(name = "matcount", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the unrestricted and covering counts for a shape.
    Count(CountArgs),
    /// Stream the matrices of a shape in canonical order.
    Enumerate(EnumerateArgs),
    /// Check registered identities over parameter grids.
    Verify(VerifyArgs),
    /// Emit one identity's value sequence along a single variable.
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Bruteforce,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleArg {
    Off,
    WhenFeasible,
    Required,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Var {
    N,
    K,
    P,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::K => "k",
            Var::P => "p",
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Number of rows (n).
    #[arg(long)]
    rows: u64,
    /// Number of columns (k).
    #[arg(long)]
    cols: u64,
    /// Exact number of ones in every column (p).
    #[arg(long)]
    colweight: u64,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Refusal threshold on the brute-force candidate count.
    #[arg(long, env = "MATCOUNT_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    rows: u64,
    #[arg(long)]
    cols: u64,
    #[arg(long)]
    colweight: u64,
    /// Keep only matrices with no all-zero row.
    #[arg(long)]
    coverage: bool,
    /// Stop after this many matrices.
    #[arg(long)]
    limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = "MATCOUNT_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of eq1..eq5, transform, or all.
    #[arg(long)]
    identity: String,
    #[arg(long, value_enum, default_value_t = OracleArg::WhenFeasible)]
    oracle: OracleArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, env = "MATCOUNT_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// JSON file with per-identity grid overrides.
    #[arg(long)]
    grid_config: Option<PathBuf>,
    #[arg(long)]
    min_n: Option<u64>,
    #[arg(long)]
    max_n: Option<u64>,
    #[arg(long)]
    min_k: Option<u64>,
    #[arg(long)]
    max_k: Option<u64>,
    #[arg(long)]
    min_p: Option<u64>,
    #[arg(long)]
    max_p: Option<u64>,
    /// Bound on k*p for grids parameterized by (k, p).
    #[arg(long)]
    max_kp: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    /// One of eq1..eq5 or transform.
    #[arg(long)]
    identity: String,
    /// The variable that runs over the range.
    #[arg(long, value_enum)]
    var: Var,
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Fixed parameter assignments, e.g. --set k=2 (repeatable).
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// An error carrying its process exit code.
struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn mismatch(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CliError {
            code: 4,
            message: message.into(),
        }
    }

    /// Library errors: cap refusals keep their dedicated exit code, the
    /// rest are argument problems.
    fn from_lib(err: matcount::Error) -> Self {
        let code = match err {
            matcount::Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(args) => commands::count(args),
        Command::Enumerate(args) => commands::enumerate(args),
        Command::Verify(args) => commands::verify(args),
        Command::Table(args) => commands::table(args),
    };
    if let Err(err) = result {
        eprintln!("matcount: {}", err.message);
        std::process::exit(err.code);
    }
}
