//! `spinor-verify`: prime sweeps, symbolic checks and exports.
//!
//! Exit codes: 0 on success, 1 if any checked identity fails, 2 on a
//! configuration or input error.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{FactorKind, Failure, Form, Identity};
use config::{read_config_file, Format, Overrides, RunConfig};

#[derive(Parser, Debug)]
#[command(
    name = "spinor-verify",
    version,
    about = "Exact verification of spinor and standard Euler factors"
)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct Common {
    /// Largest prime in a sweep [default: 541]
    #[arg(long, global = true)]
    max_prime: Option<u64>,

    /// Comma-separated weights [default: 12]
    #[arg(long, global = true, value_delimiter = ',')]
    kappa: Option<Vec<i64>>,

    /// Highest q-expansion index computed [default: max-prime + 1]
    #[arg(long, global = true)]
    series_length: Option<usize>,

    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads (0 = one per core)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// File of key=value settings; flags take precedence
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Degree-8 spinor factorization at every prime up to --max-prime
    VerifySpin,
    /// Degree-7 standard factorization at every prime up to --max-prime
    VerifyStandard,
    /// Satake-parameter identities for each weight in --kappa
    SymbolicCheck {
        /// Emit JSON instead of one line per identity
        #[arg(long)]
        json: bool,
    },
    /// q-expansion coefficients a(0..=N) as CSV
    Qexp {
        #[arg(value_enum)]
        form: Form,
        n: usize,
    },
    /// One local factor at a prime as JSON
    Euler {
        p: u64,
        #[arg(value_enum)]
        kind: FactorKind,
    },
    /// Eigenvalue table for every prime up to --max-prime
    Export,
}

fn resolve(common: Common) -> Result<RunConfig, Failure> {
    let file = common
        .config
        .as_deref()
        .map(read_config_file)
        .transpose()
        .map_err(|e| Failure::Config(e.0))?;
    let flags = Overrides {
        max_prime: common.max_prime,
        kappa: common.kappa,
        series_length: common.series_length,
        out: common.out,
        format: common.format,
        jobs: common.jobs,
    };
    RunConfig::resolve(file, flags).map_err(|e| Failure::Config(e.0))
}

fn run(cli: Cli) -> commands::Outcome {
    let config = resolve(cli.common)?;
    match cli.command {
        Command::VerifySpin => commands::verify(&config, Identity::Spin),
        Command::VerifyStandard => commands::verify(&config, Identity::Standard),
        Command::SymbolicCheck { json } => commands::symbolic(&config, json),
        Command::Qexp { form, n } => commands::qexp(form, n, config.out.as_deref()),
        Command::Euler { p, kind } => commands::euler(p, kind, config.out.as_deref()),
        Command::Export => commands::export(&config),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
