//! `apa`: validation, invariants and isomorphism decisions from the command
//! line.
//!
//! Exit codes: 0 success or isomorphic, 1 usage or parse error, 2 invalid
//! object, 3 non-isomorphic.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "apa",
    version,
    about = "Exact invariants and isomorphism tests for point and hyperplane arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for randomly generated inputs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for witness searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Use the exhaustive search instead of the pruned one (small inputs only).
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check general position of a sphere, normal-system or arrangement file.
    Validate { path: PathBuf },
    /// All line cycles of all projections to the 2-sphere.
    Cycles { path: PathBuf },
    /// Decide whether two normal systems are isomorphic.
    NsIso { first: PathBuf, second: PathBuf },
    /// Decide whether two hyperplane arrangements are isomorphic.
    HaIso { first: PathBuf, second: PathBuf },
    /// Count regions and compare with the closed-form counts.
    Regions { path: PathBuf },
    /// Concurrency sign map of an arrangement.
    Signs { path: PathBuf },
    /// Compatible symbols of four antipodal pairs on the 2-sphere. Without a
    /// path, uses the standard arrangement, or a random one when --seed is set.
    Symbols { path: Option<PathBuf> },
    /// Recompute every tabulated fixture and report differences.
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    let opts = commands::Options {
        oracle: cli.oracle,
        seed: cli.seed,
    };
    let result = match &cli.command {
        Command::Validate { path } => commands::validate(path),
        Command::Cycles { path } => commands::cycles(path),
        Command::NsIso { first, second } => commands::ns_iso(first, second, &opts),
        Command::HaIso { first, second } => commands::ha_iso(first, second, &opts),
        Command::Regions { path } => commands::regions(path),
        Command::Signs { path } => commands::signs(path),
        Command::Symbols { path } => commands::symbols(path.as_deref(), &opts),
        Command::VerifyPaper => commands::verify_paper(),
    };
    match result {
        Ok(report) => {
            let text = report.render(cli.format);
            let written = match &cli.output {
                Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(report.code),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
