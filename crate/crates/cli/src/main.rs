use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use liecohom::catalog;
use liecohom::complex::{cohomology_with_cap, DEFAULT_MAX_DIM};
use liecohom::io::{self, InputDocument};
use liecohom::lie::{ideal_check, jacobi_check};
use liecohom::numeric::DEFAULT_TOLERANCE;
use liecohom::selftest::{self, SelftestConfig};
use liecohom::{dense_quotient_cohomology, CohomologyReport, DenseQuotientReport, Error, PipelineOptions};

const EXIT_JACOBI: u8 = 1;
const EXIT_NOT_IDEAL: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_DIM_CAP: u8 = 4;
const EXIT_FAILED: u8 = 5;

/// Exact Lie algebra cohomology and cohomology of quotients by ideals.
#[derive(Parser, Debug)]
#[command(name = "liecohom", version)]
struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = selftest::DEFAULT_SEED)]
    seed: u64,

    /// Refuse algebras above this dimension.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,

    /// Tolerance for the numeric Maurer-Cartan check.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,

    /// Skip verifying that the quotient pullback is a chain isomorphism.
    #[arg(long, global = true)]
    no_chain_iso: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Jacobi identity and, when present, that the ideal is an ideal.
    Validate { path: PathBuf },
    /// Betti numbers of a Lie algebra.
    Cohomology {
        path: PathBuf,
        /// Also print cocycle representatives.
        #[arg(long)]
        representatives: bool,
    },
    /// Cohomology of the quotient by an ideal.
    Quotient { path: PathBuf },
    /// Browse the built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the property suites.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show { key: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Jacobi(_) => EXIT_JACOBI,
            Error::NotAnIdeal(_) => EXIT_NOT_IDEAL,
            Error::DimensionCap { .. } => EXIT_DIM_CAP,
            Error::Parse(_)
            | Error::Document(_)
            | Error::DimensionMismatch { .. }
            | Error::DependentBasis
            | Error::MixedFields(..)
            | Error::DivisionByZero => EXIT_PARSE,
            _ => EXIT_FAILED,
        };
        let message = match &e {
            Error::Jacobi(violations) => {
                let lines: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
                format!("{e}:\n{}", lines.join("\n"))
            }
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(path: &Path) -> Result<InputDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_PARSE, message: format!("cannot read {}: {e}", path.display()) })?;
    Ok(io::parse_input(&text)?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn validate(cli: &Cli, path: &Path) -> CmdResult {
    let doc = read_input(path)?;
    let alg = doc.algebra();
    let violations = jacobi_check(alg);
    if !violations.is_empty() {
        return Err(Error::Jacobi(violations).into());
    }
    let ideal_dim = match &doc {
        InputDocument::Pipeline(input) => {
            if let Some(w) = ideal_check(alg, &input.ideal)? {
                return Err(Error::NotAnIdeal(w).into());
            }
            Some(input.ideal.dim())
        }
        InputDocument::Algebra(_) => None,
    };
    if cli.json {
        print_json(&json!({
            "algebra": alg.name(),
            "dimension": alg.dim(),
            "field": alg.field().to_string(),
            "ideal_dim": ideal_dim,
            "valid": true,
        }));
    } else {
        println!("algebra: {}", alg.name());
        println!("dimension: {}", alg.dim());
        println!("field: {}", alg.field());
        println!("jacobi: ok");
        if let Some(d) = ideal_dim {
            println!("ideal: ok (dimension {d})");
        }
    }
    Ok(())
}

fn print_report(r: &CohomologyReport, representatives: bool) {
    println!("betti: {}", join(&r.betti));
    println!("ranks: {}", join(&r.ranks));
    println!("euler_characteristic: {}", r.euler_characteristic());
    if representatives {
        println!("representatives:");
        for (k, reps) in r.representatives.iter().enumerate() {
            for form in reps {
                println!("  H^{k}: {form}");
            }
        }
    }
}

fn cohomology(cli: &Cli, path: &Path, representatives: bool) -> CmdResult {
    let doc = read_input(path)?;
    let alg = doc.algebra();
    let report = cohomology_with_cap(alg, cli.max_dim)?;
    if cli.json {
        println!("{}", io::report_to_json(&report));
    } else {
        println!("algebra: {}", alg.name());
        println!("dimension: {}", alg.dim());
        println!("field: {}", alg.field());
        print_report(&report, representatives);
    }
    Ok(())
}

fn print_quotient(r: &DenseQuotientReport) {
    println!("algebra: {}", r.algebra);
    if !r.note.is_empty() {
        println!("note: {}", r.note);
    }
    println!("ideal_dim: {}", r.ideal_dim);
    println!("quotient_dim: {}", r.quotient_dim);
    println!("abelian: {}", r.abelian_quotient);
    println!("chain_iso: {}", if r.chain_iso_verified { "verified" } else { "skipped" });
    print_report(&r.report, false);
}

fn quotient(cli: &Cli, path: &Path) -> CmdResult {
    let input = match read_input(path)? {
        InputDocument::Pipeline(input) => input,
        InputDocument::Algebra(_) => {
            return Err(Failure {
                code: EXIT_PARSE,
                message: "quotient needs a document with \"algebra\" and \"ideal\"".into(),
            })
        }
    };
    let options = PipelineOptions { max_dim: cli.max_dim, verify_chain_iso: !cli.no_chain_iso };
    let report = dense_quotient_cohomology(&input, &options)?;
    if cli.json {
        println!("{}", io::quotient_report_to_json(&report));
    } else {
        print_quotient(&report);
    }
    Ok(())
}

fn catalog_cmd(cli: &Cli, action: &CatalogAction) -> CmdResult {
    match action {
        CatalogAction::List => {
            if cli.json {
                print_json(&json!(catalog::KEYS));
            } else {
                for key in catalog::KEYS {
                    println!("{key}");
                }
            }
        }
        CatalogAction::Show { key } => {
            let entry = catalog::lookup(key)
                .ok_or_else(|| Failure { code: EXIT_PARSE, message: format!("unknown catalog key {key:?}") })?;
            let document = entry.document_json();
            if cli.json {
                let doc: serde_json::Value = serde_json::from_str(&document).expect("catalog documents are JSON");
                print_json(&json!({
                    "key": entry.key,
                    "document": doc,
                    "expected_betti": entry.expected_betti,
                    "note": entry.note,
                }));
            } else {
                println!("{document}");
                println!("expected betti: {}", join(&entry.expected_betti));
                println!("note: {}", entry.note);
            }
        }
    }
    Ok(())
}

fn selftest_cmd(cli: &Cli) -> CmdResult {
    let config = SelftestConfig { seed: cli.seed, tolerance: cli.tol, ..SelftestConfig::default() };
    let report = selftest::run_all(&config);
    if cli.json {
        let suites: Vec<_> = report
            .suites
            .iter()
            .map(|s| json!({"name": s.name, "passed": s.passed, "detail": s.detail}))
            .collect();
        print_json(&json!({"seed": cli.seed, "passed": report.passed(), "suites": suites}));
    } else {
        println!("{report}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure { code: EXIT_FAILED, message: "selftest failed".into() })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Validate { path } => validate(&cli, path),
        Command::Cohomology { path, representatives } => cohomology(&cli, path, *representatives),
        Command::Quotient { path } => quotient(&cli, path),
        Command::Catalog { action } => catalog_cmd(&cli, action),
        Command::Selftest => selftest_cmd(&cli),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
