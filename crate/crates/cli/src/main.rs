//! `triflip`: command-line surface over the triangulation library.
//!
//! Exit codes: 0 success (including budget-exhausted-but-flagged searches),
//! 1 domain errors (invalid flips, validation failures, missing nodes),
//! 2 usage errors.

mod commands;
mod record;

use clap::{Parser, Subcommand, ValueEnum};
use commands::CliError;
use record::CommandResult;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use triflip::kernel::Vertex;
use triflip::MirrorMode;

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MirrorArg {
    On,
    Off,
}

impl From<MirrorArg> for MirrorMode {
    fn from(m: MirrorArg) -> Self {
        match m {
            MirrorArg::On => MirrorMode::On,
            MirrorArg::Off => MirrorMode::Off,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "triflip",
    version,
    about = "Combinatorial triangulations: generators, flips, flip-graph catalogs, and common-edge bounds"
)]
struct Cli {
    /// Print the machine-readable record instead of text output
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timings in the machine record (breaks
    /// byte-for-byte reproducibility of records)
    #[arg(long, global = true)]
    timings: bool,
    /// Worker threads for enumeration and verification sweeps
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangulation family member
    Gen {
        /// Family: g1 (host plus red face vertices), g2 (double apex), host
        /// (max-degree-6 host)
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Isomorphism mode recorded alongside the artifact
        #[arg(long, value_enum, default_value_t = MirrorArg::On)]
        mirror: MirrorArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a triangulation file
    Validate {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Flip one edge
    Flip {
        /// Edge as `a,b`
        #[arg(long)]
        edge: String,
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a flip sequence
    Apply {
        /// Flips as `a-b,c-d,...`, applied left to right
        #[arg(long)]
        flips: String,
        #[arg(default_value = "-")]
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the canonical code
    Canon {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = MirrorArg::On)]
        mirror: MirrorArg,
    },
    /// Enumerate the flip graph for a vertex count
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MirrorArg::On)]
        mirror: MirrorArg,
        /// Abort (with partial progress reported) past this many nodes
        #[arg(long)]
        limit_nodes: Option<usize>,
        /// Write the catalog file here
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Exact flip distance between two triangulations, using a catalog
    Distance {
        #[arg(long)]
        catalog: PathBuf,
        /// Require the catalog to carry this mirror mode
        #[arg(long, value_enum)]
        mirror: Option<MirrorArg>,
        a: String,
        b: String,
    },
    /// Exact flip-graph diameter of a catalog
    Diameter {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, value_enum)]
        mirror: Option<MirrorArg>,
    },
    /// Maximize common edges over all vertex bijections
    Maxcommon {
        a: String,
        b: String,
        /// Search to optimality regardless of budgets
        #[arg(long)]
        exact: bool,
        /// Node budget for the branch-and-bound search
        #[arg(long, default_value_t = 5_000_000)]
        budget_nodes: u64,
        /// Wall-clock budget in milliseconds
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Write the witness bijection here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form flip-distance lower bound for the extremal pair
    Bound {
        #[arg(long)]
        n: u64,
    },
    /// Greedy path cover, optionally with the exact minimum and the
    /// double-apex mapping
    Pathcover {
        #[arg(default_value = "-")]
        input: String,
        /// Also compute the exact minimum path count (n <= 11)
        #[arg(long)]
        exact: bool,
        /// Map the cover onto the same-size double apex and report c
        #[arg(long)]
        map_g2: bool,
    },
    /// Maximum matching
    Matching {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run the small-scale verification table
    Verify {
        /// Largest vertex count to enumerate (4..=11)
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
}

fn parse_pair(s: &str, sep: char) -> Result<(Vertex, Vertex), CliError> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| CliError(format!("expected `a{sep}b`, got `{s}`")))?;
    let a = a.trim().parse().map_err(|_| CliError(format!("bad vertex id `{a}`")))?;
    let b = b.trim().parse().map_err(|_| CliError(format!("bad vertex id `{b}`")))?;
    Ok((a, b))
}

fn parse_flips(s: &str) -> Result<Vec<(Vertex, Vertex)>, CliError> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| parse_pair(part.trim(), '-'))
        .collect()
}

fn run(cli: &Cli) -> Result<CommandResult, CliError> {
    match &cli.command {
        Command::Gen { family, n, mirror, out } => {
            commands::gen(family, *n, (*mirror).into(), out)
        }
        Command::Validate { input } => commands::validate(input),
        Command::Flip { edge, input, out } => {
            commands::flip_cmd(input, parse_pair(edge, ',')?, out)
        }
        Command::Apply { flips, input, out } => {
            commands::apply_cmd(input, &parse_flips(flips)?, out)
        }
        Command::Canon { input, mirror } => commands::canon(input, (*mirror).into()),
        Command::Enumerate { n, mirror, limit_nodes, catalog } => {
            commands::enumerate_cmd(*n, (*mirror).into(), cli.workers, *limit_nodes, catalog)
        }
        Command::Distance { catalog, mirror, a, b } => {
            commands::distance_cmd(catalog, mirror.map(Into::into), a, b)
        }
        Command::Diameter { catalog, mirror } => {
            commands::diameter_cmd(catalog, mirror.map(Into::into))
        }
        Command::Maxcommon { a, b, exact, budget_nodes, budget_ms, out } => {
            commands::maxcommon_cmd(a, b, *exact, *budget_nodes, *budget_ms, out)
        }
        Command::Bound { n } => commands::bound_cmd(*n),
        Command::Pathcover { input, exact, map_g2 } => {
            commands::pathcover_cmd(input, *exact, *map_g2)
        }
        Command::Matching { input } => commands::matching_cmd(input),
        Command::Verify { nmax } => commands::verify_cmd(*nmax, cli.workers),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(mut result) => {
            if cli.json {
                if cli.timings {
                    result.record["timings"] =
                        serde_json::json!({ "total_ms": started.elapsed().as_millis() as u64 });
                }
                println!("{}", serde_json::to_string_pretty(&result.record).expect("serializable"));
            } else {
                print!("{}", result.text);
            }
            ExitCode::from(result.exit_code)
        }
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
