//! `bsdh`: anti-canonical positivity of Bott-Samelson-Demazure-Hansen
//! varieties from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
//! failure (bad rank, non-reduced word, ...), 3 verification violation.

mod commands;
mod error;
mod fixtures;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use bsdh_core::bsdh::Basis;
use bsdh_core::{RootSystem, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::SweepOptions;
use crate::error::CliError;
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "bsdh",
    version,
    about = "Anti-canonical line bundles on Bott-Samelson-Demazure-Hansen varieties"
)]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeArgs {
    /// Dynkin family A..G, or a full type such as A3.
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    /// Rank, unless already part of --type.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Debug, Args)]
struct WordArgs {
    #[command(flatten)]
    target: TypeArgs,
    /// Reduced word as comma-separated 1-based simple indices; empty for a point.
    #[arg(long, value_parser = parse_word, allow_hyphen_values = true)]
    word: Word,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BasisArg {
    O,
    X,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficients of K^-1 in the O basis (m-vector) and X basis.
    Coeffs {
        #[command(flatten)]
        args: WordArgs,
        #[arg(long, value_enum, default_value = "both")]
        basis: BasisArg,
    },
    /// Global generation, Fano, very ample and weak-Fano flags.
    Classify {
        #[command(flatten)]
        args: WordArgs,
    },
    /// Reduced words (and commutation classes) of an element.
    Words {
        #[command(flatten)]
        target: TypeArgs,
        /// Any reduced word of the element.
        #[arg(long, value_parser = parse_word, conflicts_with = "longest")]
        word: Option<Word>,
        /// Use the longest element.
        #[arg(long)]
        longest: bool,
        /// Group the words into commutation classes.
        #[arg(long)]
        classes: bool,
        /// Print counts only.
        #[arg(long)]
        count_only: bool,
    },
    /// Coxeter elements c with c^-1(sum of simple roots) = -alpha_i.
    Census {
        #[command(flatten)]
        target: TypeArgs,
    },
    /// Run verification suites: oracle-m, thm56, thm58, cor54, census, j1,
    /// character, structural, fixtures or all.
    Verify {
        suite: String,
        /// Comma-separated targets such as A3,B3,G2 or A4:2 (minuscule index).
        #[arg(long, conflicts_with = "ty")]
        types: Option<String>,
        /// A single type (with --rank or as A3).
        #[arg(long = "type", value_name = "TYPE")]
        ty: Option<String>,
        #[arg(long, requires = "ty")]
        rank: Option<usize>,
        /// Without explicit types, sweep every type up to this rank.
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Visit every element and word regardless of rank.
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Number of random reduced words per type.
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for sampled sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Anti-canonical character and its lowest-weight report.
    Character {
        #[command(flatten)]
        args: WordArgs,
    },
    /// Check the worked-example corpus.
    Fixtures {
        /// Corpus file; defaults to the embedded corpus.
        #[arg(long)]
        file: Option<std::path::PathBuf>,
    },
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse()
}

fn root_system(t: &TypeArgs) -> Result<RootSystem, CliError> {
    Ok(RootSystem::new(commands::resolve_type(&t.ty, t.rank)?))
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Coeffs { args, basis } => {
            let basis = match basis {
                BasisArg::O => Some(Basis::O),
                BasisArg::X => Some(Basis::X),
                BasisArg::Both => None,
            };
            commands::coeffs(&root_system(&args.target)?, &args.word, basis)
        }
        Command::Classify { args } => commands::classify(&root_system(&args.target)?, &args.word),
        Command::Words {
            target,
            word,
            longest: _,
            classes,
            count_only,
        } => commands::words(&root_system(&target)?, word.as_ref(), classes, count_only),
        Command::Census { target } => commands::census(&root_system(&target)?),
        Command::Verify {
            suite,
            types,
            ty,
            rank,
            max_rank,
            exhaustive,
            sample,
            seed,
        } => {
            let targets = match (types, ty) {
                (Some(list), _) => commands::parse_targets(&list)?,
                (None, Some(ty)) => vec![commands::Target {
                    ty: commands::resolve_type(&ty, rank)?,
                    minuscule: None,
                }],
                (None, None) => commands::default_targets(max_rank),
            };
            let opts = SweepOptions {
                exhaustive,
                sample,
                seed,
            };
            commands::verify(&suite, &targets, opts)
        }
        Command::Character { args } => commands::character(&root_system(&args.target)?, &args.word),
        Command::Fixtures { file } => match file {
            None => commands::fixtures(fixtures::EMBEDDED, "embedded"),
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                commands::fixtures(&text, &path.display().to_string())
            }
        },
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
    let start = Instant::now();
    match run(cli.command) {
        Ok(mut report) => {
            report.duration_ms = start.elapsed().as_millis() as u64;
            if cli.json {
                println!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(if report.failed() { 3 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
