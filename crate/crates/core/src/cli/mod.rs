//! Command-line front end: `solve`, `verify`, `dump`, `convert`.
//!
//! Exit codes: 0 on success, 1 when a check fails or an invariant is violated, 2 on usage errors.

pub mod suites;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::associator::{solve_associator, Associator, AssociatorJson, FreeChoice, FreeParam};
use crate::error::AlgebraError;
use crate::morphism_lab::{rho, varpi, varpi_bar_elem};
use crate::ring::{fmt_q, parse_q, Truncated, Q};
use crate::series::{Alphabet, SeriesJson, TruncSeries};
use crate::sphere_braid::{pr_table, P5Elem, TABLE_COLUMNS};
use crate::braid_lie::{SmashElem, Tag};
use crate::w_algebras::YSeries;
pub use suites::{Context, SuiteName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dscop", version, about = "Exact checks for the Betti and de Rham harmonic coproducts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Truncation degree.
    #[arg(long, env = "DSCOP_DEGREE", default_value_t = 6)]
    pub degree: usize,
    /// The parameter μ as `p/q`.
    #[arg(long, default_value = "1", value_parser = parse_mu, allow_hyphen_values = true)]
    pub mu: Q,
}

fn parse_mu(s: &str) -> Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for an associator and print it as JSON.
    Solve {
        #[command(flatten)]
        common: Common,
        /// JSON list of `{"degree","lyndon","value"}` fixing free coordinates.
        #[arg(long)]
        free_params: Option<String>,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        #[command(flatten)]
        common: Common,
        /// Associator JSON as written by `solve`; solved on the fly otherwise.
        #[arg(long)]
        assoc: Option<String>,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print one of the reference objects.
    Dump {
        #[arg(value_enum)]
        kind: DumpKind,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        assoc: Option<String>,
    },
    /// Convert a series between the text and JSON forms.
    Convert {
        /// Input file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        to: Format,
        #[arg(long, value_enum, default_value_t = AlphabetName::E)]
        alphabet: AlphabetName,
        /// Truncation degree for text input.
        #[arg(long, env = "DSCOP_DEGREE", default_value_t = 6)]
        degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DumpKind {
    VarpiE12,
    RhoE0,
    VarpiBarX12,
    PrTable,
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphabetName {
    /// `e0, e1`
    E,
    /// `e15, e25, e35`
    F3,
    /// `y1, y2, ...`
    Y,
}

/// A failure that maps to an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

fn load_assoc(path: &Option<String>, common: &Common) -> Result<Option<Associator>, CliError> {
    let Some(p) = path else { return Ok(None) };
    let j: AssociatorJson = serde_json::from_str(&read_input(p)?).map_err(|e| CliError::Usage(format!("{p}: {e}")))?;
    let a = Associator::from_json(&j).map_err(|e| CliError::Usage(format!("{p}: {e}")))?;
    if a.phi.cap() < common.degree {
        return Err(CliError::Usage(format!("{p} has degree {} below the requested {}", a.phi.cap(), common.degree)));
    }
    Ok(Some(Associator { degree: common.degree, phi: a.phi.with_cap(common.degree), ..a }))
}

fn load_free_params(path: &str) -> Result<FreeChoice, CliError> {
    let list: Vec<FreeParam> = serde_json::from_str(&read_input(path)?).map_err(|e| CliError::Usage(format!("{path}: {e}")))?;
    let mut choice = FreeChoice::new();
    for p in list {
        let v = parse_q(&p.value).map_err(|e| CliError::Usage(e.to_string()))?;
        choice.entry(p.degree).or_default().insert(p.lyndon, v);
    }
    Ok(choice)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

#[derive(Serialize, Deserialize)]
struct GammaDump {
    mu: String,
    degree: usize,
    coefficients: Vec<String>,
}

fn dump(kind: DumpKind, common: &Common, assoc: Option<Associator>) -> Result<String, CliError> {
    let cap = common.degree.max(1);
    Ok(match kind {
        DumpKind::VarpiE12 => varpi(&SmashElem::generator(Tag::P5, cap, "e12")?).to_string(),
        DumpKind::RhoE0 => rho(&TruncSeries::e0(cap)).to_string(),
        DumpKind::VarpiBarX12 => varpi_bar_elem(&P5Elem::xij(1, 2)?).to_string(),
        DumpKind::PrTable => {
            let mut s = String::from("     ");
            for (i, j) in TABLE_COLUMNS {
                s += &format!(" | x{i}{j}");
            }
            s.push('\n');
            for (i, row) in pr_table() {
                s += &format!("pr{i}  ");
                for w in row {
                    s += &format!(" | {w}");
                }
                s.push('\n');
            }
            s
        }
        DumpKind::Gamma => {
            let a = match assoc {
                Some(a) => a,
                None => Associator::solve(&common.mu, common.degree)?,
            };
            let g = a.gamma();
            to_json(&GammaDump { mu: fmt_q(&a.mu), degree: a.degree, coefficients: g.coeffs().iter().map(fmt_q).collect() })
        }
    })
}

fn convert(input: &str, to: Format, alphabet: AlphabetName, degree: usize) -> Result<String, CliError> {
    let text = read_input(input)?;
    let trimmed = text.trim();
    let series = if trimmed.starts_with('{') {
        let j: SeriesJson = serde_json::from_str(trimmed).map_err(|e| CliError::Usage(e.to_string()))?;
        TruncSeries::from_json(&j).map_err(|e| CliError::Usage(e.to_string()))?
    } else {
        let parsed = match alphabet {
            AlphabetName::E => TruncSeries::parse(&Alphabet::e(), degree, trimmed),
            AlphabetName::F3 => TruncSeries::parse(&Alphabet::f3(), degree, trimmed),
            AlphabetName::Y => YSeries::parse(degree, trimmed).map(YSeries::into_e_form),
        };
        parsed.map_err(|e| CliError::Usage(e.to_string()))?
    };
    Ok(match to {
        Format::Json => to_json(&series.to_json()),
        Format::Text if alphabet == AlphabetName::Y => YSeries::from_e(&series)?.to_string(),
        Format::Text => series.to_string(),
    })
}

/// Runs a parsed command, writing to `out`; returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let emit = |out: &mut dyn Write, s: &str| writeln!(out, "{s}").map_err(|e| CliError::Failed(e.to_string()));
    match cli.command {
        Command::Solve { common, free_params } => {
            let choice = match free_params {
                Some(p) => load_free_params(&p)?,
                None => FreeChoice::new(),
            };
            let a = solve_associator(&common.mu, common.degree, &choice)?;
            emit(out, &to_json(&a.to_json()))?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, common, assoc, seed } => {
            let assoc = load_assoc(&assoc, &common)?;
            let ctx = Context::new(common.degree, assoc.as_ref().map(|a| a.mu.clone()).unwrap_or(common.mu.clone()), seed, assoc);
            let reports = suites::run(suite, &ctx);
            let passed = reports.iter().all(|r| r.passed);
            if suite == SuiteName::All {
                emit(out, &to_json(&reports))?;
            } else {
                emit(out, &to_json(&reports[0]))?;
            }
            Ok(if passed { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Dump { kind, common, assoc } => {
            let assoc = load_assoc(&assoc, &common)?;
            emit(out, &dump(kind, &common, assoc)?)?;
            Ok(EXIT_OK)
        }
        Command::Convert { input, to, alphabet, degree } => {
            emit(out, &convert(&input, to, alphabet, degree)?)?;
            Ok(EXIT_OK)
        }
    }
}

/// Full entry point: parses `args`, runs, prints errors, returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            EXIT_FAIL
        }
    }
}

