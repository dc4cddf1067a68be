//! `wordrep`: decide word-representability, check and emit refutation
//! transcripts, and re-run the two-clique family results.
//!
//! Exit status: 0 when every assertion of the run holds, 1 when one fails,
//! 2 on usage or input errors.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use wordrep::family::Assets;

use input::InputFormat;

#[derive(Parser, Debug)]
#[command(name = "wordrep", version, about = "Word-representability via semi-transitive orientations")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Print the machine-readable report.
    #[arg(long, global = true)]
    pub json: bool,
    /// One worker and no timings, for byte-identical reports.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Graph input format.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is word-representable.
    Check(commands::CheckArgs),
    /// Check a word against a graph, or search for a uniform representing word.
    Word(commands::WordArgs),
    /// Check an orientation (`u>v` lines) for semi-transitivity.
    Orient(commands::OrientArgs),
    /// Verify, emit or normalise refutation transcripts.
    Proof {
        #[command(subcommand)]
        command: commands::ProofCommand,
    },
    /// Two-clique family graphs: build, enumerate, characterize, deletion cases.
    Family {
        #[command(subcommand)]
        command: commands::FamilyCommand,
    },
    /// Re-check the ten stated claims and print a claim-by-claim table.
    Paper(commands::PaperArgs),
    /// Convert a graph between formats.
    Convert(commands::ConvertArgs),
}

/// Outcome of one command: human text, a JSON document, and whether all
/// assertions held.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

/// Input or usage problem; exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let threads = if g.deterministic { 1 } else { g.threads };
    // a second initialisation only fails if a pool already exists, which is harmless
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    let assets = Assets::from_env();
    let result = match cli.command {
        Command::Check(a) => commands::check(&a, g, &assets),
        Command::Word(a) => commands::word(&a, g, &assets),
        Command::Orient(a) => commands::orient(&a, g, &assets),
        Command::Proof { command } => commands::proof(&command, g, &assets),
        Command::Family { command } => commands::family(&command, g, &assets),
        Command::Paper(a) => commands::paper(&a, g, &assets),
        Command::Convert(a) => commands::convert(&a, g, &assets),
    };
    match result {
        Ok(report) => {
            if g.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serialisable"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
