//! Command-line front end: parse specs, classify wreath products, decide
//! variety equality and run oracle batches.

mod commands;
mod demo;
mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use report::{Exit, Report};

#[derive(Debug, Parser)]
#[command(
    name = "varwreath",
    version,
    about = "Varieties generated by wreath products A Wr B"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Run the worked examples and exit.
    #[arg(long)]
    pub demo: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalize an abelian group expression and print its invariants.
    Parse { expr: String },
    /// K_p-series, Shield parameters and nilpotency class of A Wr B.
    Classify {
        #[arg(long)]
        passive: String,
        #[arg(long)]
        active: String,
    },
    /// Decide whether A1 Wr B1 and A2 Wr B2 generate the same variety.
    Decide(DecideArgs),
    /// Separating variety for a prime at which the active groups diverge.
    Witness {
        #[command(flatten)]
        groups: DecideArgs,
        /// Prime to use; defaults to the smallest diverging prime.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Check Shield's class against enumeration for each manifest line.
    OracleVerify {
        /// File with one `<passive> Wr <active>` pair per line.
        #[arg(long)]
        manifest: PathBuf,
        /// Largest group, in elements, the oracle may enumerate.
        #[arg(long, default_value_t = varwreath::oracle::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run the worked examples.
    Demo,
}

#[derive(Debug, Clone, Args)]
pub struct DecideArgs {
    #[arg(long)]
    pub a1: String,
    #[arg(long)]
    pub a2: String,
    #[arg(long)]
    pub b1: String,
    #[arg(long)]
    pub b2: String,
    /// Accept var(A1) = var(A2) without checking it.
    #[arg(long)]
    pub assert_var_equal: bool,
}

pub fn run(cli: &Cli) -> Report {
    let command = match (&cli.command, cli.demo) {
        (None, true) | (Some(Command::Demo), _) => return demo::run(),
        (Some(_), true) => {
            return Report::failure(Exit::Parse, "usage", "--demo cannot be combined with a command");
        }
        (None, false) => return Report::failure(Exit::Parse, "usage", "no command given; try --help"),
        (Some(command), false) => command,
    };
    match command {
        Command::Parse { expr } => commands::parse(expr),
        Command::Classify { passive, active } => commands::classify(passive, active),
        Command::Decide(args) => commands::decide(args),
        Command::Witness { groups, prime } => commands::witness(groups, *prime),
        Command::OracleVerify { manifest, budget } => commands::oracle_verify(manifest, *budget),
        Command::Demo => unreachable!("handled above"),
    }
}
