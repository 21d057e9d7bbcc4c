//! `rookery` — exact enumeration of permutations with restricted positions.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 FAIL (no recurrence
//! found within the search budget), 3 internal verification mismatch.

mod cache;
mod cmds;
mod report;
mod sets;

use anyhow::bail;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rookery_core::{Counter, Mode};
use std::path::PathBuf;

use cache::Cache;
use cmds::{Budgets, Ctx, Outcome};

#[derive(Parser)]
#[command(
    name = "rookery",
    version,
    about = "Exact enumeration of permutations with restricted positions",
    long_about = "Counts permutations whose displacements pi(i) - i avoid (or realize) a \
                  prescribed integer set, via rook-polynomial inclusion-exclusion with an \
                  independent permanent-based cross-check, and discovers the recurrences \
                  and rational generating functions the counting families satisfy. All \
                  arithmetic is exact; large integers print as decimal strings."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for the advisory JSON result cache (one file per set and mode).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Set + straight/circular choice (commands built on rook polynomials).
#[derive(Args)]
struct FamilyArgs {
    /// Forbidden displacement set, e.g. '{0,1}' or '-2,-1,1,2'.
    #[arg(short, long, value_name = "SET", allow_hyphen_values = true)]
    set: String,
    /// Take displacements mod n (the round-table convention).
    #[arg(long)]
    circular: bool,
}

/// Set + full mode choice (commands defined for all three modes).
#[derive(Args)]
struct ModalArgs {
    /// Displacement set, e.g. '{0,1}' or '-2,-1,1,2'.
    #[arg(short, long, value_name = "SET", allow_hyphen_values = true)]
    set: String,
    /// Take displacements mod n (the round-table convention).
    #[arg(long, conflicts_with = "allowed")]
    circular: bool,
    /// Count permutations whose displacement always lies IN the set.
    #[arg(long)]
    allowed: bool,
}

impl ModalArgs {
    fn mode(&self) -> Mode {
        match (self.circular, self.allowed) {
            (true, _) => Mode::Circular,
            (_, true) => Mode::Allowed,
            _ => Mode::Straight,
        }
    }
}

/// Recurrence-search budgets.
#[derive(Args)]
struct BudgetArgs {
    /// Largest C-finite recurrence order tried.
    #[arg(long, default_value_t = 8, value_name = "D")]
    max_order: usize,
    /// Largest t-degree allowed in C-finite recurrence coefficients.
    #[arg(long, default_value_t = 4, value_name = "DEG")]
    max_tdeg: usize,
    /// Holonomic search budget: order + coefficient degree <= this.
    #[arg(long, default_value_t = 6, value_name = "C")]
    max_complexity: usize,
    /// Trailing terms reserved for verification, never fitted.
    #[arg(long, default_value_t = 10, value_name = "G")]
    held_out: usize,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            max_order: self.max_order,
            max_tdeg: self.max_tdeg,
            max_complexity: self.max_complexity,
            held_out: self.held_out,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rook polynomial of a 0/1 matrix file (rows of 0/1, spaces optional).
    Rp {
        /// Path to the matrix file.
        matrix: PathBuf,
    },
    /// C-finite recurrence satisfied by the family's rook polynomials.
    Rookrec {
        #[command(flatten)]
        family: FamilyArgs,
        /// Rook polynomials to fit on (0 = exactly as many as needed).
        #[arg(short = 'n', long, default_value_t = 0, value_name = "N")]
        terms: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// First terms of the counting sequence.
    Seq {
        #[command(flatten)]
        family: ModalArgs,
        /// How many terms to print.
        #[arg(short = 'n', long, default_value_t = 20, value_name = "N")]
        terms: usize,
    },
    /// Terms, a holonomic recurrence (or FAIL), and a long extension.
    Info {
        #[command(flatten)]
        family: ModalArgs,
        /// Terms computed for recurrence fitting.
        #[arg(long, default_value_t = 40, value_name = "N")]
        terms: usize,
        /// Terms printed.
        #[arg(long, default_value_t = 20, value_name = "L1")]
        l1: usize,
        /// Index the sequence is extended to via the recurrence.
        #[arg(long, default_value_t = 50, value_name = "L2")]
        l2: usize,
        /// Reserved: asymptotic expansion order (rejected; not implemented).
        #[arg(long, value_name = "K")]
        asymp: Option<usize>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Rational generating function of an allowed-displacement family.
    Gf {
        /// Allowed displacement set, e.g. '{-2,-1,1,2}'.
        #[arg(short, long, value_name = "SET", allow_hyphen_values = true)]
        set: String,
        /// Counted terms fitted on (a(0) = 1 is prepended).
        #[arg(short = 'n', long, default_value_t = 25, value_name = "N")]
        terms: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Self-contained markdown report for a family.
    Report {
        #[command(flatten)]
        family: ModalArgs,
        /// Terms computed for recurrence fitting.
        #[arg(long, default_value_t = 40, value_name = "N")]
        terms: usize,
        /// Terms listed in the report.
        #[arg(long, default_value_t = 20, value_name = "L1")]
        l1: usize,
        /// Index the sequence is extended to.
        #[arg(long, default_value_t = 50, value_name = "L2")]
        l2: usize,
        /// Oracle cross-check depth.
        #[arg(long, default_value_t = 9, value_name = "NMAX")]
        n_max: usize,
        /// Output file (default: report_<mode>_<set>.md).
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
        #[command(flatten)]
        budgets: BudgetArgs,
    },
    /// Cross-check the two exact counting routes for n = 1..=n-max.
    Verify {
        #[command(flatten)]
        family: ModalArgs,
        /// Largest board size checked.
        #[arg(long, default_value_t = 8, value_name = "NMAX")]
        n_max: usize,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => {}
        Ok(Outcome::Fail) => std::process::exit(2),
        Ok(Outcome::Mismatch) => std::process::exit(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let ctx = Ctx {
        counter: Counter::new(),
        cache: match &cli.cache {
            Some(dir) => Some(Cache::new(dir)?),
            None => None,
        },
    };
    let rendered = match &cli.command {
        Command::Rp { matrix } => cmds::rp(matrix)?,
        Command::Rookrec {
            family,
            terms,
            budgets,
        } => {
            let s = sets::parse_set(&family.set)?;
            let mode = if family.circular {
                Mode::Circular
            } else {
                Mode::Straight
            };
            cmds::rookrec(&ctx, &s, mode, *terms, budgets.budgets())?
        }
        Command::Seq { family, terms } => {
            let s = sets::parse_set(&family.set)?;
            cmds::seq(&ctx, &s, family.mode(), *terms)?
        }
        Command::Info {
            family,
            terms,
            l1,
            l2,
            asymp,
            budgets,
        } => {
            if asymp.is_some() {
                bail!(
                    "the asymptotics argument K is reserved but not implemented; \
                     rerun without --asymp"
                );
            }
            let s = sets::parse_set(&family.set)?;
            cmds::info(&ctx, &s, family.mode(), *terms, *l1, *l2, budgets.budgets())?
        }
        Command::Gf {
            set,
            terms,
            budgets,
        } => {
            let s = sets::parse_set(set)?;
            cmds::gf(&ctx, &s, *terms, budgets.budgets())?
        }
        Command::Report {
            family,
            terms,
            l1,
            l2,
            n_max,
            output,
            budgets,
        } => report::report(
            &ctx,
            &sets::parse_set(&family.set)?,
            family.mode(),
            *terms,
            *l1,
            *l2,
            *n_max,
            budgets.budgets(),
            output.clone(),
        )?,
        Command::Verify { family, n_max } => {
            let s = sets::parse_set(&family.set)?;
            cmds::verify(&ctx, &s, family.mode(), *n_max)?
        }
    };
    match cli.format {
        Format::Text => emit(&rendered.text),
        Format::Json => emit(&serde_json::to_string_pretty(&rendered.json)?),
    }
    Ok(rendered.outcome)
}

/// Write a line to stdout, exiting quietly when the reader has gone away
/// (`rookery seq ... | head`); a consumer hanging up is not our error.
fn emit(text: &str) {
    use std::io::{ErrorKind, Write};
    let mut out = std::io::stdout().lock();
    let result = out
        .write_all(text.as_bytes())
        .and_then(|()| out.write_all(b"\n"))
        .and_then(|()| out.flush());
    if let Err(e) = result {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(1);
    }
}
