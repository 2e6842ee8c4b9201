//! `quasidisc`: closed-form versus oracle resultants and discriminants.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quasidisc_core::families::RecurrenceFamily;
use quasidisc_core::formulas::ClosedResultant;
use quasidisc_core::rational::{format_rational, parse_rational};
use quasidisc_core::registry::Family;
use quasidisc_core::resultant::{discriminant, resultant};
use quasidisc_core::spec::FamilySpec;
use quasidisc_core::verify::{is_precondition, run_suite, Suite};
use quasidisc_core::{Error, ExactRational};

const EXIT_USAGE: u8 = 2;
const EXIT_GENERATION: u8 = 3;
const EXIT_MISMATCH: u8 = 4;
const EXIT_SKIPPED: u8 = 5;

#[derive(Parser)]
#[command(
    name = "quasidisc",
    version,
    about = "Exact resultants and discriminants of recurrence-defined polynomial families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of r_n, low to high
    Gen { spec: PathBuf, n: usize },
    /// Res(r_n, r_{n-1})
    Resultant {
        spec: PathBuf,
        n: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// disc(r_n + c r_{n-1})
    Disc {
        spec: PathBuf,
        n: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Run a verification suite and write a JSON report
    Verify {
        /// One of: all, ulas, turaj, quasi, hypergeom
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A failed command: exit code plus message for stderr.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) | Error::InvalidParams(_) => EXIT_USAGE,
            e if is_precondition(e) => EXIT_SKIPPED,
            _ => EXIT_GENERATION,
        };
        let prefix = if code == EXIT_SKIPPED {
            "skipped"
        } else {
            "error"
        };
        Failure(code, format!("{prefix}: {e}"))
    }
}

fn load(path: &Path) -> Result<Family, Failure> {
    let text = fs::read_to_string(path).map_err(|e| {
        Failure(
            EXIT_USAGE,
            format!("error: cannot read {}: {e}", path.display()),
        )
    })?;
    let spec = FamilySpec::from_json(&text)
        .map_err(|e| Failure(EXIT_USAGE, format!("error: {}: {e}", path.display())))?;
    spec.build()
        .map_err(|e| Failure(EXIT_USAGE, format!("error: {}: {e}", path.display())))
}

/// Prints one or both values; a mismatch is exit code 4.
fn report(
    method: Method,
    formula: impl FnOnce() -> Result<ExactRational, Error>,
    oracle: impl FnOnce() -> Result<ExactRational, Error>,
) -> Result<(), Failure> {
    match method {
        Method::Formula => println!("{}", format_rational(&formula()?)),
        Method::Oracle => println!("{}", format_rational(&oracle()?)),
        Method::Both => {
            let (f, o) = (formula()?, oracle()?);
            if f == o {
                println!("{} == {}", format_rational(&f), format_rational(&o));
            } else {
                println!("{} != {}", format_rational(&f), format_rational(&o));
                return Err(Failure(
                    EXIT_MISMATCH,
                    "mismatch between formula and oracle".into(),
                ));
            }
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { spec, n } => {
            let mut family = load(&spec)?;
            let poly = family.term(n)?;
            println!(
                "{}",
                serde_json::to_string(&poly.coeff_strings()).expect("strings serialize")
            );
            Ok(())
        }
        Command::Resultant { spec, n, method } => {
            let mut family = load(&spec)?;
            if n == 0 {
                return Err(Failure(
                    EXIT_USAGE,
                    "error: Res(r_n, r_(n-1)) needs n >= 1".into(),
                ));
            }
            if n == 1 && method != Method::Oracle && matches!(family, Family::Ulas(_)) {
                eprintln!("note: the closed form starts at n = 2; R_1 is the oracle value");
            }
            let mut oracle_family = family.clone();
            report(
                method,
                || family.closed_resultant(n),
                || resultant(&oracle_family.term(n)?, &oracle_family.term(n - 1)?),
            )
        }
        Command::Disc { spec, n, c, method } => {
            let mut family = load(&spec)?;
            let c =
                parse_rational(&c).map_err(|e| Failure(EXIT_USAGE, format!("error: --c: {e}")))?;
            if n == 0 {
                return Err(Failure(
                    EXIT_USAGE,
                    "error: disc(r_n + c r_(n-1)) needs n >= 1".into(),
                ));
            }
            let mut oracle_family = family.clone();
            report(
                method,
                || family.formula_disc(n, &c),
                || discriminant(&oracle_family.quasi(n, &c)?),
            )
        }
        Command::Verify { suite, seed, out } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: Error| Failure(EXIT_USAGE, format!("error: {e}")))?;
            let report = run_suite(suite, seed);
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            match out {
                Some(path) => fs::write(&path, json + "\n").map_err(|e| {
                    Failure(
                        EXIT_USAGE,
                        format!("error: cannot write {}: {e}", path.display()),
                    )
                })?,
                None => println!("{json}"),
            }
            let t = &report.totals;
            eprintln!(
                "suite {suite}: {} cases, {} passed, {} failed, {} skipped",
                t.cases, t.passed, t.failed, t.skipped
            );
            if t.failed > 0 {
                Err(Failure(
                    EXIT_MISMATCH,
                    format!("{} failing cases", t.failed),
                ))
            } else if t.passed == 0 && t.skipped > 0 {
                Err(Failure(EXIT_SKIPPED, "every case was skipped".into()))
            } else {
                Ok(())
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, message)) => {
            eprintln!("{message}");
            ExitCode::from(code)
        }
    }
}
