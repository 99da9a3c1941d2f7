//! Batch front end for the `lexsect` solvers: reads an instance file,
//! solves, and writes a JSON report.

pub mod format;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use lexsect::oracle::{brute_lexmin_with_budget, OracleError, DEFAULT_MULTISET_BUDGET};
use lexsect::{
    bipartite_to_system, digraph_to_system, is_totally_unimodular_bruteforce, solve_lexmin, solve_min_critical,
    SolveError, SystemError, TuCheck, TuSystem,
};
use serde::Serialize;

use crate::format::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;
pub const EXIT_NOT_TU: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "lexsect", version, about = "n solutions of a totally unimodular system with lexicographically minimal intersection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// n s-t paths in a directed graph.
    Paths(CommonArgs),
    /// n perfect matchings in a bipartite graph.
    Matchings(CommonArgs),
    /// n solutions of a raw system given as JSON {"A": [[...]], "b": [...]}.
    Tu(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Instance file.
    pub file: PathBuf,
    /// Number of solutions.
    #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Minimize only the number of components shared by all n solutions.
    #[arg(long)]
    pub critical_only: bool,
    /// Cross-check against exhaustive search (small instances only).
    #[arg(long)]
    pub oracle: bool,
    /// Check total unimodularity over every square submatrix first.
    #[arg(long)]
    pub verify_tu: bool,
    /// Reserved; the solvers are deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Maximum number of submatrices `--verify-tu` will examine.
    #[arg(long, default_value_t = 1_000_000)]
    pub tu_limit: u128,
    /// Maximum number of feasible solutions `--oracle` will enumerate.
    #[arg(long, default_value_t = 1000)]
    pub oracle_cap: usize,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub status: &'static str,
    pub n: usize,
    pub d: usize,
    pub solutions: Vec<Vec<usize>>,
    pub vulnerability: Vec<usize>,
    pub critical: Option<usize>,
    pub objective_bigint: Option<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Debug, Serialize, PartialEq, Eq)]
pub struct OracleReport {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vulnerability: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Failure with its exit code; the message goes to stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

impl From<SystemError> for Failure {
    fn from(e: SystemError) -> Self {
        Failure { code: EXIT_PARSE, message: e.to_string() }
    }
}

/// Outcome of one invocation: the report to print (if any) and the exit
/// code.
pub struct Outcome {
    pub report: Option<Report>,
    pub code: i32,
    pub message: Option<String>,
}

fn load(command: &Command) -> Result<(TuSystem, &CommonArgs), Failure> {
    match command {
        Command::Paths(args) => {
            let inst = format::read_graph(&args.file)?.into_digraph(args.n as usize)?;
            Ok((digraph_to_system(&inst)?, args))
        }
        Command::Matchings(args) => {
            let inst = format::read_graph(&args.file)?.into_bipartite(args.n as usize)?;
            Ok((bipartite_to_system(&inst)?, args))
        }
        Command::Tu(args) => Ok((format::read_system(&args.file)?, args)),
    }
}

fn oracle_report(system: &TuSystem, n: usize, cap: usize, solved: Option<&[usize]>) -> OracleReport {
    match (brute_lexmin_with_budget(system, n, cap, DEFAULT_MULTISET_BUDGET), solved) {
        (Ok(f), Some(v)) => OracleReport {
            status: if f.as_slice() == v { "agree" } else { "disagree" },
            vulnerability: Some(f.0),
            reason: None,
        },
        (Ok(f), None) => OracleReport {
            status: "disagree",
            vulnerability: Some(f.0),
            reason: Some("solver reported infeasible".into()),
        },
        (Err(OracleError::Infeasible), None) => OracleReport { status: "agree", vulnerability: None, reason: None },
        (Err(OracleError::Infeasible), Some(_)) => OracleReport {
            status: "disagree",
            vulnerability: None,
            reason: Some("oracle found no feasible solution".into()),
        },
        (Err(e), _) => OracleReport { status: "skipped", vulnerability: None, reason: Some(e.to_string()) },
    }
}

/// Compares only the critical entry in `--critical-only` mode.
fn oracle_critical_report(system: &TuSystem, n: usize, cap: usize, critical: usize) -> OracleReport {
    match brute_lexmin_with_budget(system, n, cap, DEFAULT_MULTISET_BUDGET) {
        Ok(f) => OracleReport {
            status: if f.critical() == critical { "agree" } else { "disagree" },
            vulnerability: Some(f.0),
            reason: None,
        },
        Err(OracleError::Infeasible) => OracleReport {
            status: "disagree",
            vulnerability: None,
            reason: Some("oracle found no feasible solution".into()),
        },
        Err(e) => OracleReport { status: "skipped", vulnerability: None, reason: Some(e.to_string()) },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(o) => o,
        Err(f) => Outcome { report: None, code: f.code, message: Some(f.message) },
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let (system, args) = load(&cli.command)?;
    let n = args.n as usize;
    let d = system.d();

    if args.verify_tu {
        match is_totally_unimodular_bruteforce(system.a(), args.tu_limit) {
            TuCheck::Yes => {}
            TuCheck::No { rows, cols, det } => {
                return Err(Failure {
                    code: EXIT_NOT_TU,
                    message: format!("not totally unimodular: rows {rows:?}, columns {cols:?} have determinant {det}"),
                })
            }
            TuCheck::TooLarge { submatrices } => {
                return Err(Failure {
                    code: EXIT_INTERNAL,
                    message: format!(
                        "too large to verify: {submatrices} submatrices exceed --tu-limit {}",
                        args.tu_limit
                    ),
                })
            }
        }
    }

    let start = Instant::now();
    let solved = if args.critical_only {
        solve_min_critical(&system, n).map(|s| {
            let f = lexsect::vulnerability(&s.bundle);
            (s.bundle, f, s.critical.to_string())
        })
    } else {
        solve_lexmin(&system, n).map(|s| (s.bundle, s.vulnerability, s.objective.to_string()))
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;

    match solved {
        Ok((bundle, f, objective)) => {
            debug_assert!(bundle.is_feasible_for(&system));
            let oracle = args.oracle.then(|| {
                if args.critical_only {
                    oracle_critical_report(&system, n, args.oracle_cap, f.critical())
                } else {
                    oracle_report(&system, n, args.oracle_cap, Some(f.as_slice()))
                }
            });
            let disagree = oracle.as_ref().is_some_and(|o| o.status == "disagree");
            let report = Report {
                status: "optimal",
                n,
                d,
                solutions: bundle.supports(),
                critical: Some(f.critical()),
                vulnerability: f.0,
                objective_bigint: Some(objective),
                elapsed_ms,
                oracle,
            };
            Ok(Outcome {
                report: Some(report),
                code: if disagree { EXIT_INTERNAL } else { EXIT_OK },
                message: disagree.then(|| "solver disagrees with the exhaustive oracle".to_string()),
            })
        }
        Err(SolveError::Infeasible) => {
            let oracle = args.oracle.then(|| oracle_report(&system, n, args.oracle_cap, None));
            let report = Report {
                status: "infeasible",
                n,
                d,
                solutions: Vec::new(),
                vulnerability: Vec::new(),
                critical: None,
                objective_bigint: None,
                elapsed_ms,
                oracle,
            };
            Ok(Outcome { report: Some(report), code: EXIT_INFEASIBLE, message: Some("infeasible".into()) })
        }
        Err(e) => Err(Failure { code: EXIT_INTERNAL, message: format!("internal error: {e}") }),
    }
}

pub fn write_report(report: &Report, output: Option<&Path>) -> std::io::Result<()> {
    let mut json = serde_json::to_string(report).expect("report serializes");
    json.push('\n');
    match output {
        Some(path) => std::fs::write(path, json),
        None => {
            print!("{json}");
            Ok(())
        }
    }
}

impl Command {
    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Paths(a) | Command::Matchings(a) | Command::Tu(a) => a,
        }
    }
}
