//! `edge-expand`: edge connectivity and expansion certificates from the
//! command line.
//!
//! Exit codes: 0 success / certified, 1 not certified, 2 invalid input,
//! 3 graph size unsupported, 4 a theorem conclusion was violated,
//! 5 no instance found within budget.

mod commands;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use edge_expand::connectivity::DEFAULT_ENUM_CAP;

use commands::{CutSource, GenSource, Outcome};
use error::CliError;
use report::Format;

#[derive(Debug, Parser)]
#[command(name = "edge-expand", version, about)]
struct Cli {
    /// Output format; `json` is the stable machine-readable contract.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Largest vertex count accepted by exhaustive cut enumeration.
    #[arg(long, env = "EDGE_EXPAND_MAX_ENUM_N", default_value_t = DEFAULT_ENUM_CAP, global = true)]
    max_enum_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge connectivity k'(G) with a minimum cut.
    Connectivity { graph: PathBuf },
    /// Check the sufficient conditions for G to be k-edge-connected.
    Certify {
        graph: PathBuf,
        partition: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check the small-cut conclusions for cuts with V2 inside S.
    #[command(group(ArgGroup::new("cuts").required(true).args(["all_cuts", "s_file"])))]
    VerifyTheorem {
        graph: PathBuf,
        partition: PathBuf,
        /// Every cut with V2 ⊆ S.
        #[arg(long)]
        all_cuts: bool,
        /// A single S read from a vertex-list file.
        #[arg(long)]
        s_file: Option<PathBuf>,
        /// Also list cuts the conclusions do not apply to.
        #[arg(long)]
        include_inapplicable: bool,
    },
    /// Contracted diameter, boundary sets and Φ of a partition.
    Profile { graph: PathBuf, partition: PathBuf },
    /// Build a gadget from a spec file, or search for a figure instance.
    #[command(group(ArgGroup::new("source").required(true).args(["spec", "target"])))]
    Gen {
        #[arg(long)]
        spec: Option<PathBuf>,
        /// One of 1a 1b 1c 1d 2a 2b.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Directory receiving graph.edges, partition.v2 and cut.s.
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Connectivity { graph } => commands::connectivity(&graph),
        Command::Certify {
            graph,
            partition,
            k,
        } => commands::certify_cmd(&graph, &partition, k),
        Command::VerifyTheorem {
            graph,
            partition,
            all_cuts,
            s_file,
            include_inapplicable,
        } => {
            let source = match (all_cuts, s_file) {
                (_, Some(path)) => CutSource::SFile(path),
                _ => CutSource::AllCuts,
            };
            commands::verify_theorem_cmd(
                &graph,
                &partition,
                source,
                include_inapplicable,
                cli.max_enum_n,
            )
        }
        Command::Profile { graph, partition } => commands::profile_cmd(&graph, &partition),
        Command::Gen {
            spec,
            target,
            seed,
            budget,
            out,
        } => {
            let source = match (spec, target) {
                (Some(path), _) => GenSource::Spec(path),
                (None, Some(id)) => GenSource::Target(id),
                (None, None) => unreachable!("clap requires one source"),
            };
            commands::gen_cmd(source, seed, budget, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            let text = outcome.report.render(format);
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
