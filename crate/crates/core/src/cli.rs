//! Command-line front end. Every command reads a JSON matroid descriptor
//! and writes one line of JSON to standard output.
//!
//! Exit codes: `0` success, `2` unreadable or invalid input, `3` budget
//! exceeded, `4` internal invariant violation (including a failed corpus
//! check).

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::corpus::{verify_corpus, Corpus, VerifyOptions};
use crate::error::{Result, WorkbenchError};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::localization::{assert_calibrated, euler_table, LocalizationOptions, DEFAULT_FIXED_POINT_BUDGET};
use crate::matroid::{Descriptor, Matroid};
use crate::orlik_solomon::{os_dimensions, OsAlgebra};
use crate::toric_white::{check_degree, DEFAULT_MULTISET_BUDGET};
use crate::tutte::{char_poly, h_polynomial, tutte_dc, TutteCache};

/// Environment variable naming the default Tutte cache directory.
pub const CACHE_ENV: &str = "MATROID_WORKBENCH_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "matroid-workbench",
    version,
    about = "Exact matroid invariants from JSON descriptors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Descriptor file, or `-` for standard input. For `verify-corpus`, a
    /// corpus file replacing the bundled one.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Field for Orlik-Solomon computations: `Q` or `GF(p)`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Degree for `os-basis`, `reduced-os-basis` and `white-check`.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Fixed-point budget for `euler-table`, multiset budget for `white-check`.
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory for persisted Tutte memo tables (`tutte`, `verify-corpus`).
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Tutte polynomial by cached deletion-contraction.
    Tutte,
    /// Characteristic polynomial and its reduction by `u - 1`.
    Charpoly,
    /// The polynomial `h(u,v)`.
    Hlv,
    /// Orlik-Solomon dimensions in every degree.
    OsDims,
    /// nbc bases of the Orlik-Solomon algebra.
    OsBasis,
    /// Reduced nbc monomials of the reduced Orlik-Solomon algebra.
    ReducedOsBasis,
    /// Euler characteristics by torus-fixed-point localization.
    EulerTable,
    /// Connectivity of degree-d toric fibers under quadric moves.
    WhiteCheck,
    /// Recompute every expected value in the corpus.
    VerifyCorpus,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Tutte => "tutte",
            Command::Charpoly => "charpoly",
            Command::Hlv => "hlv",
            Command::OsDims => "os-dims",
            Command::OsBasis => "os-basis",
            Command::ReducedOsBasis => "reduced-os-basis",
            Command::EulerTable => "euler-table",
            Command::WhiteCheck => "white-check",
            Command::VerifyCorpus => "verify-corpus",
        }
    }
}

/// Process exit code for an error.
pub fn exit_code(e: &WorkbenchError) -> i32 {
    match e {
        WorkbenchError::InvalidInput(_) | WorkbenchError::InvalidField(_) | WorkbenchError::LooplessRequired(_) => 2,
        WorkbenchError::TooLarge { .. } => 3,
        WorkbenchError::InternalInvariantViolation(_) => 4,
    }
}

fn reject(cli: &Cli, flag: &str, present: bool, allowed: &[Command]) -> Result<()> {
    if present && !allowed.contains(&cli.command) {
        return Err(WorkbenchError::invalid(format!(
            "--{flag} does not apply to {}",
            cli.command.name()
        )));
    }
    Ok(())
}

fn read_descriptor(cli: &Cli, stdin: &mut (dyn Read + Send)) -> Result<Matroid> {
    let mut text = String::new();
    match cli.input.as_deref() {
        None | Some("-") => stdin
            .read_to_string(&mut text)
            .map_err(|e| WorkbenchError::invalid(format!("cannot read standard input: {e}")))?,
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| WorkbenchError::invalid(format!("cannot read {path}: {e}")))?;
            0
        }
    };
    Descriptor::from_json(&text)?.to_matroid()
}

fn os_field(cli: &Cli, m: &Matroid) -> Result<FieldSpec> {
    cli.field.as_deref().map_or(Ok(m.natural_field()), FieldSpec::parse)
}

fn degrees(cli: &Cli, top: usize) -> Result<Vec<usize>> {
    match cli.degree {
        Some(k) if k > top => Err(WorkbenchError::invalid(format!("degree {k} exceeds {top}"))),
        Some(k) => Ok(vec![k]),
        None => Ok((0..=top).collect()),
    }
}

fn os_basis_json<F: Field>(m: &Matroid, field: F, degrees: &[usize]) -> Result<Value> {
    let name = field.name();
    let alg = OsAlgebra::new(m, field)?;
    let out = degrees
        .iter()
        .map(|&k| {
            let space = alg.space(k)?;
            Ok(json!({
                "degree": k,
                "dimension": space.dimension(),
                "basis": space.basis().iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"field": name, "degrees": out}))
}

fn reduced_basis_json<F: Field>(m: &Matroid, field: F, degrees: &[usize]) -> Result<Value> {
    let name = field.name();
    let alg = OsAlgebra::new(m, field)?;
    let out = degrees
        .iter()
        .map(|&k| {
            let space = alg.reduced_space(k)?;
            Ok(json!({
                "degree": k,
                "dimension": space.dimension,
                "index_sets": space.index_sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
                "elements": space.basis.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"field": name, "degrees": out}))
}

fn open_cache(cli: &Cli) -> Result<TutteCache> {
    match &cli.cache {
        Some(dir) => TutteCache::with_dir(dir),
        None => Ok(TutteCache::new()),
    }
}

/// Run a parsed command; returns the JSON to print and the exit code.
pub fn execute(cli: &Cli, stdin: &mut (dyn Read + Send)) -> Result<(Value, i32)> {
    use Command::*;
    reject(cli, "field", cli.field.is_some(), &[OsDims, OsBasis, ReducedOsBasis])?;
    reject(
        cli,
        "degree",
        cli.degree.is_some(),
        &[OsBasis, ReducedOsBasis, WhiteCheck],
    )?;
    reject(cli, "budget", cli.budget.is_some(), &[EulerTable, WhiteCheck])?;
    if cli.command == VerifyCorpus {
        let corpus = match cli.input.as_deref() {
            None => Corpus::builtin(),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| WorkbenchError::invalid(format!("cannot read {path}: {e}")))?;
                Corpus::from_json(&text)?
            }
        };
        assert_calibrated()?;
        let cache = open_cache(cli)?;
        let report = verify_corpus(
            &corpus,
            &VerifyOptions {
                cache: &cache,
                ..VerifyOptions::default()
            },
        );
        cache.persist()?;
        let code = if report.all_passed { 0 } else { 4 };
        return Ok((serde_json::to_value(report).expect("report serializes"), code));
    }
    let m = read_descriptor(cli, stdin)?;
    let value = match cli.command {
        Tutte => {
            let cache = open_cache(cli)?;
            let t = tutte_dc(&m, &cache)?;
            cache.persist()?;
            t.to_json()
        }
        Charpoly => {
            let c = char_poly(&m)?;
            json!({"chi": c.chi.to_json(), "reduced": c.reduced.map(|p| p.to_json())})
        }
        Hlv => {
            let h = h_polynomial(&m)?;
            json!({"h": h.poly.to_json(), "formal": h.formal})
        }
        OsDims => json!(os_dimensions(&m, os_field(cli, &m)?)?),
        OsBasis => {
            let ks = degrees(cli, m.rank())?;
            match os_field(cli, &m)? {
                FieldSpec::Rationals => os_basis_json(&m, Rationals, &ks)?,
                FieldSpec::Prime(p) => os_basis_json(&m, PrimeField::new(p)?, &ks)?,
            }
        }
        ReducedOsBasis => {
            let ks = degrees(cli, m.rank().saturating_sub(1))?;
            match os_field(cli, &m)? {
                FieldSpec::Rationals => reduced_basis_json(&m, Rationals, &ks)?,
                FieldSpec::Prime(p) => reduced_basis_json(&m, PrimeField::new(p)?, &ks)?,
            }
        }
        EulerTable => {
            assert_calibrated()?;
            let options = LocalizationOptions {
                max_fixed_points: cli.budget.unwrap_or(DEFAULT_FIXED_POINT_BUDGET),
                ..Default::default()
            };
            let table = euler_table(&m, &options)?;
            let h = h_polynomial(&m)?;
            json!({
                "table": table.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "matches_h_polynomial": table.matches(&h.poly),
                "one_parameter_subgroup": table.one_parameter_subgroup,
                "fixed_points": table.fixed_points,
                "signs": options.signs,
            })
        }
        WhiteCheck => {
            let report = check_degree(
                &m,
                cli.degree.unwrap_or(3),
                cli.budget.unwrap_or(DEFAULT_MULTISET_BUDGET),
            )?;
            serde_json::to_value(report).expect("report serializes")
        }
        VerifyCorpus => unreachable!("handled above"),
    };
    Ok((value, 0))
}

/// Parse `args`, run, and write output; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let mut input = Vec::new();
    if cli.command != Command::VerifyCorpus && matches!(cli.input.as_deref(), None | Some("-")) {
        if let Err(e) = stdin.read_to_end(&mut input) {
            let _ = writeln!(stderr, "error: cannot read standard input: {e}");
            return 2;
        }
    }
    let stdin = &mut input.as_slice();
    let result = match cli.jobs {
        Some(0) => Err(WorkbenchError::invalid("--jobs must be positive")),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| execute(&cli, stdin)),
            Err(e) => Err(WorkbenchError::invalid(format!("cannot start {jobs} workers: {e}"))),
        },
        None => execute(&cli, stdin),
    };
    match result {
        Ok((value, code)) => {
            let _ = writeln!(stdout, "{value}");
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
