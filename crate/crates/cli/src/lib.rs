//! Command-line front end for `horofano`: root-system and flag-variety
//! queries, the catalog table, and verification against the embedded
//! fixture tables.

pub mod commands;
pub mod error;
pub mod fixtures;
pub mod nodes;
pub mod record;
pub mod render;

use clap::{Parser, Subcommand};

pub use error::{CliError, Result};
pub use fixtures::FixtureSet;
pub use record::ReportRecord;
pub use render::OutputFormat;

/// Exit status for success.
pub const EXIT_OK: u8 = 0;
/// Exit status when computed values disagree with the fixtures.
pub const EXIT_MISMATCH: u8 = 1;
/// Exit status for usage and parse errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "horofano", version, about = "Invariants and tangent-bundle stability of two-orbit Fano varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots and Cartan matrix of a type such as B4 or A1xG2.
    Roots {
        #[arg(value_name = "TYPE")]
        dynkin: String,
    },
    /// Invariants of G/P for the parabolic with the given marked nodes.
    Flag {
        #[arg(value_name = "TYPE")]
        dynkin: String,
        /// 1-based nodes, e.g. `1,3`; `factor.node` for products, e.g. `1.1,2.1`.
        #[arg(long, value_name = "NODES")]
        mark: String,
    },
    /// Weyl dimension of the irreducible module with the given highest weight.
    Dim {
        #[arg(value_name = "TYPE")]
        dynkin: String,
        /// Fundamental-weight coordinates, e.g. `1,0,0`.
        #[arg(value_name = "WEIGHT", allow_hyphen_values = true)]
        weight: String,
    },
    /// The catalog of triples up to rank N with all invariants and verdicts.
    Table {
        #[arg(long, value_name = "N", default_value_t = 12)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
    },
    /// Invariants and verdict of one triple, e.g. `Cn:n=4:k=3` or `PasF4`.
    Check {
        #[arg(value_name = "TRIPLE")]
        triple: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
    },
    /// Recompute the embedded fixture tables and compare exactly.
    Verify {
        #[arg(long, value_name = "N", default_value_t = 12)]
        max_n: u32,
    },
}

/// What a command printed and how it should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            status: EXIT_OK,
        }
    }

    fn error(err: CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            status: EXIT_USAGE,
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with(cli, &FixtureSet::embedded())
}

/// Like [`run`], with the fixtures `verify` compares against.
pub fn run_with(cli: &Cli, fixtures: &FixtureSet) -> Outcome {
    let result = match &cli.command {
        Command::Roots { dynkin } => commands::roots(dynkin),
        Command::Flag { dynkin, mark } => commands::flag(dynkin, mark),
        Command::Dim { dynkin, weight } => commands::dim(dynkin, weight),
        Command::Table { max_n, format } => commands::table(*max_n, *format),
        Command::Check { triple, format } => commands::check(triple, *format),
        Command::Verify { max_n } => {
            return match commands::verify(*max_n, fixtures) {
                Ok(v) => Outcome {
                    stdout: v.to_string(),
                    stderr: String::new(),
                    status: if v.passed() { EXIT_OK } else { EXIT_MISMATCH },
                },
                Err(e) => Outcome::error(e),
            }
        }
    };
    result.map_or_else(Outcome::error, Outcome::ok)
}
