//! Formula-versus-oracle verification matrix with a JSON report.

pub mod fuzz;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quantity {
    Resultant,
    Discriminant,
    Degree,
    LeadingCoefficient,
    ConstantTerm,
    Identity,
    Parity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationCase {
    pub family: String,
    pub n: usize,
    pub c: Option<String>,
    pub quantity: Quantity,
    pub route: String,
    pub formula_value: Option<String>,
    pub oracle_value: Option<String>,
    /// `None` when skipped.
    pub equal: Option<bool>,
    pub skipped_reason: Option<String>,
    /// Set when either side failed for a reason other than a violated hypothesis.
    pub error: Option<String>,
    pub wall_time_ms: f64,
}

impl VerificationCase {
    pub fn failed(&self) -> bool {
        self.equal == Some(false)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub totals: Totals,
    /// Indices into `cases`.
    pub failures: Vec<usize>,
    pub cases: Vec<VerificationCase>,
}

impl VerificationReport {
    pub fn from_cases(suite: Suite, seed: u64, cases: Vec<VerificationCase>) -> Self {
        let mut totals = Totals {
            cases: cases.len(),
            ..Totals::default()
        };
        let mut failures = Vec::new();
        for (idx, case) in cases.iter().enumerate() {
            match case.equal {
                Some(true) => totals.passed += 1,
                Some(false) => {
                    totals.failed += 1;
                    failures.push(idx);
                }
                None => totals.skipped += 1,
            }
        }
        VerificationReport {
            suite: suite.to_string(),
            seed,
            totals,
            failures,
            cases,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    /// The report with every `wall_time_ms` zeroed, for determinism checks.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        out.cases.iter_mut().for_each(|c| c.wall_time_ms = 0.0);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Ulas,
    Turaj,
    Quasi,
    Hypergeom,
}

impl Suite {
    pub const NAMES: [&'static str; 5] = ["all", "ulas", "turaj", "quasi", "hypergeom"];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Ulas => "ulas",
            Suite::Turaj => "turaj",
            Suite::Quasi => "quasi",
            Suite::Hypergeom => "hypergeom",
        };
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "ulas" => Suite::Ulas,
            "turaj" => Suite::Turaj,
            "quasi" => Suite::Quasi,
            "hypergeom" => Suite::Hypergeom,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown suite `{s}`, expected one of {}",
                    Suite::NAMES.join(", ")
                )))
            }
        })
    }
}

/// What a case compares.
pub enum Outcome {
    Values(ExactRational, ExactRational),
    Text(String, String),
}

/// A pending case: metadata plus a closure producing both sides.
pub struct CaseSpec {
    pub family: String,
    pub n: usize,
    pub c: Option<ExactRational>,
    pub quantity: Quantity,
    pub route: String,
    pub run: Box<dyn Fn() -> Result<Outcome> + Send + Sync>,
}

impl CaseSpec {
    pub fn new(
        family: impl Into<String>,
        n: usize,
        c: Option<ExactRational>,
        quantity: Quantity,
        route: impl Into<String>,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        CaseSpec {
            family: family.into(),
            n,
            c,
            quantity,
            route: route.into(),
            run: Box::new(run),
        }
    }

    pub fn evaluate(&self) -> VerificationCase {
        let start = Instant::now();
        let outcome = (self.run)();
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        let mut case = VerificationCase {
            family: self.family.clone(),
            n: self.n,
            c: self.c.as_ref().map(format_rational),
            quantity: self.quantity,
            route: self.route.clone(),
            formula_value: None,
            oracle_value: None,
            equal: None,
            skipped_reason: None,
            error: None,
            wall_time_ms,
        };
        match outcome {
            Ok(Outcome::Values(formula, oracle)) => {
                case.equal = Some(formula == oracle);
                case.formula_value = Some(format_rational(&formula));
                case.oracle_value = Some(format_rational(&oracle));
            }
            Ok(Outcome::Text(formula, oracle)) => {
                case.equal = Some(formula == oracle);
                case.formula_value = Some(formula);
                case.oracle_value = Some(oracle);
            }
            Err(e) if is_precondition(&e) => case.skipped_reason = Some(e.to_string()),
            Err(e) => {
                case.equal = Some(false);
                case.error = Some(e.to_string());
            }
        }
        case
    }
}

/// Errors meaning "the formula does not apply here" rather than "wrong".
pub fn is_precondition(e: &Error) -> bool {
    matches!(e, Error::HypothesisViolated(_) | Error::DegenerateB { .. })
}

/// Evaluates cases in parallel, returning results in input order.
pub fn run_cases(cases: &[CaseSpec]) -> Vec<VerificationCase> {
    cases.par_iter().map(CaseSpec::evaluate).collect()
}

pub fn cases_for(suite: Suite, seed: u64) -> Vec<CaseSpec> {
    match suite {
        Suite::All => [Suite::Ulas, Suite::Turaj, Suite::Quasi, Suite::Hypergeom]
            .into_iter()
            .flat_map(|s| cases_for(s, seed))
            .collect(),
        Suite::Ulas => suites::ulas_cases(seed),
        Suite::Turaj => suites::turaj_cases(seed),
        Suite::Quasi => suites::quasi_cases(),
        Suite::Hypergeom => suites::hypergeom_cases(seed),
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> VerificationReport {
    VerificationReport::from_cases(suite, seed, run_cases(&cases_for(suite, seed)))
}
