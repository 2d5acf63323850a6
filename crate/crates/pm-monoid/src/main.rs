//! `pmm`: evaluates generator words, enumerates the monoid, runs the
//! verification suites, computes matrix-family limits, certifies
//! convergence, and multiplies serialized elements.
//!
//! Exit codes: 0 success, 1 semantic failure (violations, non-convergence),
//! 2 parse or usage error, 3 exceeded bounds or invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use pm_monoid::braid::{verify_braid_relations, PMBraid, PMBraidWord};
use pm_monoid::layered::verify_outer_action_homomorphism;
use pm_monoid::matrix::{
    check_convergence, limit_of_family, m_to_json, parse_family, parse_m_unchecked,
    parse_samples, parse_tilde, tilde_product, tilde_to_json,
};
use pm_monoid::partition::enumerate_partitions;
use pm_monoid::rmonoid::{
    enumerate_monoid, verify_matched_pair_axioms, verify_presentation_relations, RElement, RWord,
};
use pm_monoid::{Config, Error};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pmm",
    version,
    about = "Toolkit for the matched-pair monoid of ordered set partitions, \
             its matrix-sequence realization, layered partial braids, and \
             their free-group actions"
)]
struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest n allowed for exhaustive enumeration and verification.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Length bound for the words substituted into relation schemas.
    #[arg(long, global = true)]
    word_bound: Option<usize>,
    /// Tolerance for convergence certification.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Sample count for randomized suites.
    #[arg(long = "samples", global = true)]
    sample_count: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a generator word to its canonical form.
    #[command(subcommand)]
    Eval(EvalKind),
    /// Print element counts and, on request, the full product table.
    Enumerate {
        n: usize,
        /// Also print the indexed multiplication table.
        #[arg(long)]
        table: bool,
    },
    /// Run a verification suite; exits 1 if any violation is found.
    Verify { suite: Suite, n: usize },
    /// Limit of a polynomial matrix family as the parameter goes to zero.
    Limit { family: PathBuf },
    /// Certify that sampled families approach a candidate limit.
    Converge { samples_file: PathBuf, candidate_file: PathBuf },
    /// Multiply two serialized elements.
    #[command(subcommand)]
    Mul(MulKind),
}

#[derive(Subcommand)]
enum EvalKind {
    /// Word in s/e generators of the partition-permutation monoid.
    R { n: usize, word: String },
    /// Word in signed s generators and e projectors of the braid monoid.
    Braid { n: usize, word: String },
}

#[derive(Subcommand)]
enum MulKind {
    /// Elements in the display form "([images], ({blocks}))".
    R { a: String, b: String },
    /// Braids in the display form "{top}->{bottom}:word | ...".
    Braid { a: String, b: String },
    /// Matrix sequences in tilde-form JSON files.
    Tilde { a: PathBuf, b: PathBuf },
}

#[derive(ValueEnum, Clone, Copy)]
enum Suite {
    /// Matched-pair axioms, exhaustive.
    MatchedPair,
    /// Defining relations in the partition-permutation model.
    RelationsR,
    /// Defining relations in the layered braid model.
    RelationsBraid,
    /// Action on layered free-group automorphisms, randomized.
    Dnb,
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn check_bound(n: usize, config: &Config) -> Result<(), Error> {
    if n == 0 || n > config.max_exhaustive_n {
        return Err(Error::BoundExceeded(format!(
            "n={n} is outside 1..={} (raise --max-n to override)",
            config.max_exhaustive_n
        )));
    }
    Ok(())
}

fn cmd_enumerate(n: usize, table: bool, config: &Config) -> Result<ExitCode, Error> {
    check_bound(n, config)?;
    let partitions = enumerate_partitions(n)?;
    let elements = enumerate_monoid(n)?;
    println!("|P_{n}|={} |R_{n}|={}", partitions.len(), elements.len());
    if table {
        let index: HashMap<&RElement, usize> =
            elements.iter().enumerate().map(|(k, e)| (e, k)).collect();
        println!("elements:");
        for (k, e) in elements.iter().enumerate() {
            println!("{k}: {e}");
        }
        println!("table:");
        for a in &elements {
            let row: Vec<String> = elements
                .iter()
                .map(|b| Ok(index[&a.product(b)?].to_string()))
                .collect::<Result<_, Error>>()?;
            println!("{}", row.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: Suite, n: usize, config: &Config) -> Result<ExitCode, Error> {
    let report = match suite {
        Suite::MatchedPair => {
            check_bound(n, config)?;
            verify_matched_pair_axioms(n)?
        }
        Suite::RelationsR => {
            check_bound(n, config)?;
            verify_presentation_relations(n, config)?
        }
        Suite::RelationsBraid => {
            check_bound(n, config)?;
            verify_braid_relations(n, config)?
        }
        Suite::Dnb => verify_outer_action_homomorphism(n, config)?,
    };
    println!("{report}");
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let defaults = Config::default();
    let config = Config {
        max_exhaustive_n: cli.max_n.unwrap_or(defaults.max_exhaustive_n),
        word_bound: cli.word_bound.unwrap_or(defaults.word_bound),
        seed: cli.seed.unwrap_or(defaults.seed),
        samples: cli.sample_count.unwrap_or(defaults.samples),
        tol: cli.tol.unwrap_or(defaults.tol),
    };
    if config.max_exhaustive_n == 0 || config.word_bound == 0 || config.tol <= 0.0 {
        return Err(Error::OutOfRange("bounds and tolerance must be positive".into()));
    }
    match cli.command {
        Command::Eval(EvalKind::R { n, word }) => {
            let element = RWord::parse(n, &word)?.evaluate();
            println!("{element}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval(EvalKind::Braid { n, word }) => {
            let element = PMBraidWord::parse(n, &word)?.evaluate()?;
            println!("{element}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { n, table } => cmd_enumerate(n, table, &config),
        Command::Verify { suite, n } => cmd_verify(suite, n, &config),
        Command::Limit { family } => {
            let family = parse_family(&read_file(&family)?)?;
            let limit = limit_of_family(&family)?;
            println!("{}", m_to_json(&limit));
            Ok(ExitCode::SUCCESS)
        }
        Command::Converge { samples_file, candidate_file } => {
            let samples = parse_samples(&read_file(&samples_file)?)?;
            let candidate = parse_m_unchecked(&read_file(&candidate_file)?)?;
            let report = check_convergence(&samples, &candidate, config.tol)?;
            println!("{report}");
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Mul(MulKind::R { a, b }) => {
            let a: RElement = a.parse()?;
            let b: RElement = b.parse()?;
            println!("{}", a.product(&b)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul(MulKind::Braid { a, b }) => {
            let a: PMBraid = a.parse()?;
            let b: PMBraid = b.parse()?;
            println!("{}", a.product(&b)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mul(MulKind::Tilde { a, b }) => {
            let a = parse_tilde(&read_file(&a)?)?;
            let b = parse_tilde(&read_file(&b)?)?;
            println!("{}", tilde_to_json(&tilde_product(&a, &b)?));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
