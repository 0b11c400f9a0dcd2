//! `outc` — command-line frontend over the analysis library.
//!
//! Three subcommands:
//!
//! * `analyze` — one group in, full invariant + automorphism report out;
//! * `verify-theorem` — scan a directory of groups of a common order p^5 and
//!   check the non-inner criterion against direct enumeration;
//! * `oracle` — cross-check the backtracking enumerator against a
//!   brute-force enumeration on every group in a directory.
//!
//! Exit codes: 0 success, 1 input error, 2 verification disagreement,
//! 3 resource overflow.

mod cache;
mod commands;
mod db;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use outc_core::coset::DEFAULT_MAX_COSETS;
use outc_core::report::Report;
use outc_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "outc",
    version,
    about = "Class-preserving automorphism analysis of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single group file: structural invariants plus the orders of
    /// Inn, Aut_c, Aut_z and Out_c.
    Analyze {
        /// Multiplication-table (.tbl) or presentation (.pres) file.
        file: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Search for a non-inner class-preserving automorphism and emit its
        /// generator images and full conjugator table.
        #[arg(long)]
        witness: bool,
        /// Directory for memoized analysis reports, keyed by a content
        /// digest of the table. Defaults to $OUTC_CACHE_DIR; caching is off
        /// when neither is set.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Scan a directory of groups of one common order p^5: evaluate the
    /// structural criterion for a non-inner class-preserving automorphism,
    /// compute Out_c directly, and fail on any disagreement.
    VerifyTheorem {
        /// Directory of .pres / .tbl files, one group per file.
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Emit the generator images of a non-inner automorphism for every
        /// flagged group.
        #[arg(long)]
        witness: bool,
    },
    /// Cross-check the backtracking class-preserving enumeration against an
    /// independent brute-force enumeration on every group in a directory.
    Oracle {
        /// Directory of .pres / .tbl files.
        dir: PathBuf,
        #[command(flatten)]
        common: Common,
        /// Largest group order handed to the brute-force path. Orders above
        /// the cap are skipped; raising it past 16 gets slow quickly.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
}

#[derive(Args)]
struct Common {
    /// How to interpret input files. `auto` decides by extension.
    #[arg(long, value_enum, default_value_t = db::Format::Auto)]
    format: db::Format,
    /// Coset limit when realizing presentations.
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    max_cosets: usize,
    /// Report rendering: grouped text or line-oriented key/value pairs.
    #[arg(long, value_enum, default_value_t = Style::Text)]
    report: Style,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads for per-group parallelism (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Style {
    Text,
    Machine,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 = the input is bad, 2 = two independent computations disagree (the
/// falsification signal), 3 = a resource limit was hit.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::Presentation(_)
        | Error::Table(_)
        | Error::Input(_)
        | Error::Io(_) => 1,
        Error::Disagreement(_) => 2,
        Error::CosetOverflow { .. } | Error::OrderCap { .. } => 3,
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze {
            file,
            common,
            witness,
            cache,
        } => {
            init_jobs(common.jobs);
            let loaded = db::load_file(&file, common.format, common.max_cosets)?;
            let cache_dir = cache::resolve_dir(cache);
            let report = match cache::lookup(cache_dir.as_deref(), &loaded, witness) {
                Some(hit) => hit,
                None => {
                    let fresh = commands::analyze(&loaded, witness)?;
                    cache::store(cache_dir.as_deref(), &loaded, witness, &fresh)?;
                    fresh
                }
            };
            emit(&report, common.report, common.out.as_deref())
        }
        Command::VerifyTheorem {
            dir,
            common,
            witness,
        } => {
            init_jobs(common.jobs);
            let groups = db::load_dir(&dir, common.format, common.max_cosets)?;
            let report = commands::scan(&groups, witness)?;
            emit(&report, common.report, common.out.as_deref())
        }
        Command::Oracle {
            dir,
            common,
            max_order,
        } => {
            init_jobs(common.jobs);
            if max_order > 16 {
                eprintln!(
                    "warning: --max-order {max_order} exceeds the default brute-force cap of 16; \
                     expect factorial-time behavior"
                );
            }
            let groups = db::load_dir(&dir, common.format, common.max_cosets)?;
            let report = commands::oracle(&groups, max_order)?;
            emit(&report, common.report, common.out.as_deref())
        }
    }
}

fn init_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn emit(report: &Report, style: Style, out: Option<&Path>) -> Result<()> {
    let rendered = match style {
        Style::Text => report.render_text(),
        Style::Machine => report.render_machine(),
    };
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}
