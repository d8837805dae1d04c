use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand};
use golden_cli::commands::{self, Method, Variant};
use golden_cli::document::{Rows, Status};
use golden_cli::{exit, render, Format};
use golden_core::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "golden",
    version,
    about = "Exact Golden calculus and Bernoulli-Fibonacci tables"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bernoulli(-Fibonacci) numbers b_0..=b_N.
    Numbers {
        #[arg(value_enum)]
        variant: Variant,
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Series)]
        method: Method,
    },
    /// Coefficients of B_n(x), constant term first.
    Poly {
        #[arg(value_enum)]
        variant: Variant,
        n: usize,
    },
    /// Exact value of B_n(x) at a rational x ("p" or "p/q").
    Eval {
        #[arg(value_enum)]
        variant: Variant,
        n: usize,
        #[arg(allow_hyphen_values = true)]
        x: Rational,
    },
    /// Rows 0..=N of the Fibonomial triangle.
    Fibonomial { n: usize },
    /// Expansion of the Golden binomial (x+y)_F^n.
    Binomial { n: usize },
    /// Check every identity up to degree N; exits 1 on any failure.
    Verify {
        #[arg(default_value_t = 32, value_parser = clap::value_parser!(u32).range(2..))]
        n: u32,
        /// Perturb b_k^F before checking (exercises the failure path).
        #[arg(long, hide = true)]
        corrupt: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut code = exit::OK;

    let doc = match &cli.command {
        Command::Numbers { variant, n, method } => commands::numbers(*variant, *n, *method),
        Command::Poly { variant, n } => commands::poly(*variant, *n),
        Command::Eval { variant, n, x } => commands::eval(*variant, *n, x),
        Command::Fibonomial { n } => commands::fibonomial(*n),
        Command::Binomial { n } => commands::binomial(*n),
        Command::Verify { n, corrupt } => {
            let n = *n as usize;
            if let Some(k) = corrupt.filter(|&k| k > 2 * n) {
                Cli::command()
                    .error(
                        ErrorKind::ValueValidation,
                        format!("--corrupt {k} exceeds the checked range 0..={}", 2 * n),
                    )
                    .exit();
            }
            let (doc, passed) = commands::verify(n, *corrupt);
            if !passed {
                code = exit::VERIFICATION_FAILED;
                report_failures(&doc.rows);
            }
            doc
        }
    };

    let text = render(&doc, cli.format);
    match &cli.out {
        None => print!("{text}"),
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(exit::USAGE);
            }
        }
    }
    ExitCode::from(code)
}

fn report_failures(rows: &Rows) {
    let Rows::Verification(rows) = rows else {
        return;
    };
    for r in rows.iter().filter(|r| r.status == Status::Fail) {
        match &r.counterexample {
            Some(c) => eprintln!("FAIL {} at n={}: {} != {}", r.identity, c.n, c.lhs, c.rhs),
            None => eprintln!("FAIL {}", r.identity),
        }
    }
}
