//! `chaincodes`: build and analyze cyclic and constacyclic codes over finite
//! chain rings.
//!
//! Exit codes: 0 success, 1 a check or validation failed, 2 usage error,
//! 3 malformed input, 4 enumeration budget exceeded.

mod commands;
mod input;
mod verify;

use std::process::ExitCode;

use chaincodes::document::Construction;
use clap::{Parser, Subcommand, ValueEnum};

use crate::input::{CliError, CliResult};

/// Rings are JSON such as '{"family":"GR","p":3,"r":1,"s":2}' or a path to a
/// file holding it. Code documents and partitions likewise.
#[derive(Debug, Parser)]
#[command(name = "chaincodes", version, about = "Linear codes over finite chain rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Trace,
    Lrs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants of a chain ring.
    RingInfo {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        json: bool,
    },
    /// The q-cyclotomic cosets modulo ell.
    Cosets {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        q: u64,
        /// Also show each coset modulo u.
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Build a code document.
    #[command(subcommand)]
    Build(Build),
    /// Type, cardinality, standard form, cyclicity and minimum weight.
    Analyze {
        #[arg(long)]
        code: String,
        /// Also test gamma-constacyclicity (integer or digit array).
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long)]
        skip_weight: bool,
        /// Cap on the number of codewords enumerated for the minimum weight.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// The dual code, as a document.
    Dual {
        #[arg(long)]
        code: String,
    },
    /// Contract a cyclic code of length u*ell to a constacyclic code of length ell.
    Contract {
        #[arg(long)]
        code: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        json: bool,
    },
    /// Concatenate a gamma-constacyclic code u times into a cyclic code.
    Concat {
        #[arg(long)]
        code: String,
        #[arg(long)]
        u: usize,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// All cyclic codes of length ell by brute-force enumeration.
    EnumerateCyclic {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ell: usize,
        /// Cap on both the vectors scanned and the codewords per code.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the structured constructions against brute force.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Random codes per sampled suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Build {
    /// C_eta(R; A), or L_eta(S; A) with --construction lrs.
    Trace {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ell: u64,
        /// Comma-separated members of A.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value = "trace")]
        construction: Kind,
    },
    /// C_R(P) from a map of coset representatives to levels.
    Partition {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        file: String,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    use commands::*;
    match cli.command {
        Command::RingInfo { ring, json } => ring_info(&input::ring(&ring)?, json),
        Command::Cosets { ell, q, u, json } => cosets(ell, q, u, json),
        Command::Build(Build::Trace { ring, ell, set, construction }) => {
            let kind = match construction {
                Kind::Trace => Construction::Trace,
                Kind::Lrs => Construction::Lrs,
            };
            build_from_set(&input::ring(&ring)?, ell, &input::set(&set)?, kind)
        }
        Command::Build(Build::Partition { ring, ell, file }) => {
            build_from_partition(&input::ring(&ring)?, ell, &input::partition(&file)?)
        }
        Command::Analyze { code, gamma, skip_weight, budget, json } => {
            analyze(&input::code(&code)?, &AnalyzeOptions { gamma, skip_weight, budget, json })
        }
        Command::Dual { code } => dual(&input::code(&code)?),
        Command::Contract { code, u, json } => contract(&input::code(&code)?, u, json),
        Command::Concat { code, u, gamma } => concat(&input::code(&code)?, u, &gamma),
        Command::EnumerateCyclic { ring, ell, budget: cap, json } => {
            enumerate_cyclic(&input::ring(&ring)?, ell, &budget(cap), json)
        }
        Command::Verify { suite, ring, ell, budget: cap, samples, seed, json } => {
            let settings = verify::Settings { budget: budget(cap), samples, seed };
            let (report, ok) = verify::run(&input::ring(&ring)?, ell, suite, &settings, json)?;
            if ok {
                Ok(report)
            } else {
                print!("{report}");
                Err(CliError::Failed("verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
