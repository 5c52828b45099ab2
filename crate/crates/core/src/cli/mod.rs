//! Command-line front end.

mod record;
mod render;
mod table;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

pub use record::{Extremes, GkRecord, GradingRecord};
pub use render::{Cell, Format, Table};
pub use table::{Kind, Selection};

use crate::error::Error;
use crate::report::Report;
use crate::rootsys::SimpleType;
use crate::suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

const DEFAULT_RANK: usize = 8;

fn parse_rank(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if (1..=64).contains(&n) => Ok(n),
        _ => Err("expected an integer in 1..=64".into()),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "levi-casimir",
    version,
    about = "Casimir eigenvalues of (Z,alpha)-gradings of simple Lie algebras",
    after_help = "Simple roots are numbered 1..n. E6: chain 1-2-3-4-5 with 6 on 3. \
E7: chain 1-..-6 with 7 on 4. E8: chain 1-..-7 with 8 on 5. F4: 1, 2 short. \
G2: 1 short. B_n: n short. C_n: n long."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a table over one type or over all types up to --rank.
    Table {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "type", value_name = "X_n")]
        simple_type: Option<SimpleType>,
        /// Restrict to one simple root (needs --type).
        #[arg(long, requires = "simple_type")]
        alpha: Option<usize>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_RANK, value_parser = parse_rank)]
        rank: usize,
    },
    /// Dump everything computed for one (Z,alpha)-grading.
    Grading {
        #[arg(long = "type", value_name = "X_n")]
        simple_type: SimpleType,
        #[arg(long)]
        alpha: usize,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Run the verification suites and report every check.
    Verify {
        /// Check a single type.
        #[arg(long, value_name = "X_n")]
        scope: Option<SimpleType>,
        #[arg(long, value_enum, default_value = "fast")]
        level: Level,
        /// Largest rank covered by --level full.
        #[arg(long, default_value_t = DEFAULT_RANK, value_parser = parse_rank)]
        rank: usize,
        /// Print only failing checks and the summary.
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Ranks up to 4, which includes F4 and G2.
    Fast,
    /// Ranks up to --rank, all exceptional types included.
    Full,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Consistency(_) | Error::Structure(_) => EXIT_CONSISTENCY,
            _ => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => out,
        Err(e) => Outcome::error(&e),
    }
}

fn execute(cmd: &Command) -> crate::Result<Outcome> {
    match *cmd {
        Command::Table {
            kind,
            simple_type,
            alpha,
            format,
            rank,
        } => {
            let types = match simple_type {
                Some(t) => vec![t],
                None => SimpleType::all_up_to(rank),
            };
            if let (Some(a), Some(t)) = (alpha, simple_type) {
                if a == 0 || a > t.rank() {
                    return Err(Error::Argument(format!("alpha must lie in 1..={} for {t}", t.rank())));
                }
            }
            let table = table::build(kind, &Selection { types, alpha })?;
            Ok(Outcome::ok(table.render(format)?))
        }
        Command::Grading {
            simple_type,
            alpha,
            format,
        } => Ok(Outcome::ok(GradingRecord::compute(simple_type, alpha)?.render(format)?)),
        Command::Verify {
            scope,
            level,
            rank,
            quiet,
        } => verify(scope, level, rank, quiet),
    }
}

/// Suites run by `verify`, in order.
pub const VERIFY_SUITES: [&str; 8] = [
    "gamma-table",
    "q-lists",
    "three-way",
    "identities",
    "subalgebras",
    "abelian",
    "spin",
    "properties",
];

fn verify(scope: Option<SimpleType>, level: Level, rank: usize, quiet: bool) -> crate::Result<Outcome> {
    let types = match (scope, level) {
        (Some(t), _) => vec![t],
        (None, Level::Fast) => SimpleType::all_up_to(4),
        (None, Level::Full) => SimpleType::all_up_to(rank),
    };
    let mut out = String::new();
    let mut total = Report::new();
    for name in VERIFY_SUITES {
        // the reference q-lists start at rank 2, and at rank 4 for D
        let suite_types: Vec<SimpleType> = if name == "q-lists" && scope.is_none() {
            let allowed = suite::q_list_types(rank);
            types.iter().copied().filter(|t| allowed.contains(t)).collect()
        } else {
            types.clone()
        };
        let report = suite::run_suite(name, &suite_types)?;
        let failed = report.failures().count();
        let _ = writeln!(out, "== {name}: {} checks, {failed} failed", report.len());
        for c in &report.checks {
            if !quiet || !c.passed {
                let _ = writeln!(out, "{c}");
            }
        }
        total.extend(report);
    }
    let failed = total.failures().count();
    let _ = writeln!(out, "== total: {} checks, {failed} failed", total.len());
    Ok(Outcome {
        code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY },
        stdout: out,
        stderr: String::new(),
    })
}
