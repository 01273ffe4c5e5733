//! `barfock`: enumerate blocks, compute canonical bases, evaluate the closed
//! forms and compare them.
//!
//! Exit codes: 0 success, 1 bad input or cap exceeded, 2 discrepancy found,
//! 3 internal invariant violated.

mod commands;
mod format;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use barfock::{Error, HParams, PeelPolicy};
use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Limits, Output, Source};
use format::Format;

#[derive(Debug, Parser)]
#[command(name = "barfock", version, about = "Canonical bases of the level-1 Fock space for h-strict partitions")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "table")]
    format: Format,
    /// Highest weight the oracle will attempt.
    #[arg(long, global = true, default_value_t = 3)]
    max_weight: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BlockArgs {
    #[arg(long)]
    h: u32,
    /// Bar-core, e.g. "(4,2)" or "()".
    #[arg(long)]
    core: String,
    #[arg(long)]
    weight: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Policy {
    Smallest,
    Largest,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the partitions of a block, or all h-strict partitions of a size.
    Block {
        #[arg(long)]
        h: u32,
        #[arg(long, conflicts_with_all = ["core", "weight"], required_unless_present = "core")]
        size: Option<u32>,
        #[arg(long, requires = "weight")]
        core: Option<String>,
        #[arg(long, requires = "core")]
        weight: Option<u32>,
        /// Keep restricted partitions only.
        #[arg(long)]
        restricted: bool,
    },
    /// Bar-core, bar-weight, content and abacus of one partition.
    Core {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        partition: String,
    },
    /// Canonical basis matrix of a block, computed from scratch.
    Cb {
        #[command(flatten)]
        block: BlockArgs,
        /// Residue chosen first when peeling strings.
        #[arg(long, value_enum, default_value = "smallest")]
        policy: Policy,
    },
    /// Closed-form matrix of a block of weight at most 2.
    Formula {
        #[command(flatten)]
        block: BlockArgs,
        /// Tag each entry with the clause that produced it.
        #[arg(long)]
        provenance: bool,
    },
    /// Compare closed forms with the oracle over every core up to a size.
    Diff {
        /// Comma-separated list of h values.
        #[arg(long, value_delimiter = ',', required = true)]
        h: Vec<u32>,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        max_core_size: u32,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check the pair relations for every pair with the given source core.
    VerifyPair {
        #[arg(long)]
        h: u32,
        /// Source core sigma.
        #[arg(long)]
        core: String,
        #[arg(long, default_value_t = 2)]
        weight: u32,
        /// Restrict to one residue.
        #[arg(long)]
        residue: Option<u32>,
    },
    /// Predicted reduced decomposition numbers for the strict rows of a block.
    PredictSpin {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long, value_enum, default_value = "oracle")]
        source: Source,
    },
}

fn run(cli: Cli) -> Result<Output> {
    let f = cli.format;
    let limits = Limits::from_env(cli.max_weight)?;
    match cli.command {
        Command::Block { h, size, core, weight, restricted } => {
            let p = HParams::new(h)?;
            let which = match (size, core, weight) {
                (Some(m), _, _) => Err(m),
                (None, Some(c), Some(w)) => Ok(commands::block_id(h, &c, w)?),
                _ => anyhow::bail!("give either --size or both --core and --weight"),
            };
            commands::block(p, which, restricted, limits, f)
        }
        Command::Core { h, partition } => commands::core(HParams::new(h)?, &commands::parse_partition(&partition)?, f),
        Command::Cb { block, policy } => {
            let policy = match policy {
                Policy::Smallest => PeelPolicy::SmallestFirst,
                Policy::Largest => PeelPolicy::LargestFirst,
            };
            commands::cb(&commands::block_id(block.h, &block.core, block.weight)?, policy, limits, f)
        }
        Command::Formula { block, provenance } => {
            commands::formula(&commands::block_id(block.h, &block.core, block.weight)?, provenance, limits, f)
        }
        Command::Diff { h, weight, max_core_size, threads } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.unwrap_or(0)).build()?;
            pool.install(|| commands::diff(&h, weight, max_core_size, limits, f))
        }
        Command::VerifyPair { h, core, weight, residue } => {
            let p = HParams::new(h)?;
            commands::verify_pairs(&commands::parse_partition(&core)?, p, weight, residue, limits, f)
        }
        Command::PredictSpin { block, source } => {
            commands::predict_spin(&commands::block_id(block.h, &block.core, block.weight)?, source, limits, f)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::Violation(_)) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(out)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.discrepancy { 2 } else { 0 })
        }
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
        Err(_) => ExitCode::from(3),
    }
}
