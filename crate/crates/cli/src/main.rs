//! `sepcheck`: separability reports, diagram identities and circle-spectrum
//! fiber tables from the command line.
//!
//! Exit codes: 0 success, 1 degenerate verdict or failed equation, 2 input
//! error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sepcheck::algebra::{load_algebra, FinAlgebra};
use sepcheck::diagram::{builtin_corpus, check_corpus, parse_corpus, EquationCorpusEntry, Extras};
use sepcheck::scalars::Matrix;
use sepcheck::separability::{decide_strong_separability, SeparabilityReport};
use sepcheck::spectrum::fiber_table;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "sepcheck",
    version,
    about = "Exact separability checks for finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide strong separability and print the report.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check diagram identities on an algebra.
    Verify {
        path: PathBuf,
        /// Equation file (`name : lhs == rhs  # anchor` per line); defaults to the builtin corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Fiber table of the degree-n map on the circle spectrum.
    Spectrum {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        degree: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the builtin diagram identities.
    CorpusList,
}

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { path, json } => analyze(&path, json),
        Command::Verify { path, corpus, json } => verify(&path, corpus.as_deref(), json),
        Command::Spectrum { degree, max, json } => spectrum(degree, max, json),
        Command::CorpusList => corpus_list(),
    };
    ExitCode::from(code.unwrap_or_else(|message| {
        eprintln!("error: {message}");
        INPUT_ERROR
    }))
}

fn load(path: &Path) -> Result<FinAlgebra, String> {
    load_algebra(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn analyze(path: &Path, json: bool) -> Result<u8, String> {
    let report = decide_strong_separability(&load(path)?);
    if json {
        println!("{}", report.to_json());
    } else {
        print_report(&report);
    }
    Ok(if report.is_strongly_separable() {
        OK
    } else {
        NEGATIVE
    })
}

fn print_matrix(m: &Matrix, indent: &str) {
    let rows = m.to_string_rows();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        println!("{indent}{}", cells.join(" "));
    }
}

fn print_report(r: &SeparabilityReport) {
    println!("algebra:      {}", r.algebra);
    println!("scalars:      {}", r.scalars);
    println!("dimension:    {}", r.dim);
    println!(
        "commutative:  {}",
        if r.is_commutative { "yes" } else { "no" }
    );
    println!("trace form:");
    print_matrix(r.trace_form.matrix(), "  ");
    println!("determinant:  {}", r.diagnostic.determinant);
    println!("rank:         {}", r.diagnostic.rank);
    if let Some(v) = &r.diagnostic.kernel_vector {
        let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
        println!("kernel:       ({})", cells.join(", "));
    }
    if let Some(d) = r.diagnostic.degeneracy {
        println!("degeneracy:   {d:?}");
    }
    println!("verdict:      {:?}", r.verdict);
    if let Some(k) = &r.kappa {
        println!("kappa:");
        print_matrix(k.coeffs(), "  ");
    }
    if let Some(f) = &r.frobenius {
        println!("comultiplication (column a is delta(e_a)):");
        print_matrix(&f.comultiplication, "  ");
    }
    if !r.axiom_results.0.is_empty() {
        println!("axioms:");
        for check in &r.axiom_results.0 {
            let status = if check.passed { "pass" } else { "FAIL" };
            match &check.witness {
                Some(w) => println!("  {:<16} {status}  witness {w:?}", check.axiom),
                None => println!("  {:<16} {status}", check.axiom),
            }
        }
    }
}

fn verify(path: &Path, corpus: Option<&Path>, json: bool) -> Result<u8, String> {
    let algebra = load(path)?;
    let entries: Vec<EquationCorpusEntry> = match corpus {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            parse_corpus(&text).map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => builtin_corpus(),
    };
    let extras = Extras::computed(&algebra);
    let results = check_corpus(&entries, &algebra, &extras);

    let mut all_pass = true;
    let mut rows = Vec::new();
    for (name, result) in &results {
        let (status, witness, error) = match result {
            Ok(None) => ("skipped", None, None),
            Ok(Some(o)) if o.passed => ("pass", None, None),
            Ok(Some(o)) => ("fail", o.witness, None),
            Err(e) => ("error", None, Some(e.to_string())),
        };
        if status == "fail" || status == "error" {
            all_pass = false;
        }
        rows.push((name, status, witness, error));
    }

    if json {
        let out: Vec<_> = rows
            .iter()
            .map(|(name, status, witness, error)| {
                json!({
                    "name": name,
                    "status": status,
                    "witness": witness.map(|(r, c)| [r, c]),
                    "error": error,
                })
            })
            .collect();
        let doc = json!({
            "algebra": algebra.name(),
            "strongly_separable": extras.kappa.is_some(),
            "all_passed": all_pass,
            "results": out,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        println!("algebra: {}", algebra.name());
        if extras.kappa.is_none() {
            println!("trace form is degenerate: identities involving kappa, delta or theta_inv are skipped");
        }
        let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
        for (name, status, witness, error) in &rows {
            let detail = match (witness, error) {
                (Some((r, c)), _) => format!("  first difference at ({r}, {c})"),
                (_, Some(e)) => format!("  {e}"),
                _ => String::new(),
            };
            println!("  {name:<width$}  {status}{detail}");
        }
    }
    Ok(if all_pass { OK } else { NEGATIVE })
}

fn spectrum(degree: u64, max: u64, json: bool) -> Result<u8, String> {
    if degree.checked_mul(max).is_none() {
        return Err("degree * max overflows".into());
    }
    let table = fiber_table(degree, max);
    if json {
        println!("{}", serde_json::to_string_pretty(&table).expect("json"));
    } else {
        let width = max.to_string().len().max(1);
        println!("{:>width$}  {:>4}  fiber", "N", "size");
        for row in &table {
            let fiber: Vec<String> = row.fiber.iter().map(ToString::to_string).collect();
            println!(
                "{:>width$}  {:>4}  {{{}}}",
                row.big_n,
                row.cardinality,
                fiber.join(", ")
            );
        }
    }
    Ok(OK)
}

fn corpus_list() -> Result<u8, String> {
    for e in builtin_corpus() {
        let marker = if e.requires_separable { "*" } else { " " };
        println!("{marker} {:<18} {}  ==  {}", e.name, e.lhs, e.rhs);
        println!("    {}    # {}", e.lhs.signature(), e.anchor);
    }
    println!("* needs a nondegenerate trace form");
    Ok(OK)
}
