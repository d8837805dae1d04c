//! Builds an [`OutputDocument`] for each subcommand.

use golden_core::verify::{self, IdentityInputs};
use golden_core::{
    golden_binomial, BernoulliTable, FactorialBasis, Family, FibTable, Notation, Rational,
    VerificationReport,
};

use crate::document::{
    BinomialRow, CounterexampleRow, EvaluationRow, Exact, FibonomialRow, Metadata, NumberPairRow,
    NumberRow, OutputDocument, PolynomialRow, Rows, Status, VerificationRow,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Variant {
    Fib,
    Classical,
}

impl Variant {
    fn family(self) -> Family {
        match self {
            Variant::Fib => Family::Fibonacci,
            Variant::Classical => Family::Classical,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Method {
    #[default]
    Series,
    Recursive,
    Both,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Recursive => "recursive",
            Method::Both => "both",
        }
    }
}

fn meta(variant: Variant, n: usize) -> Metadata {
    Metadata {
        variant: Some(variant.family().name().to_string()),
        n: Some(n),
        ..Metadata::default()
    }
}

pub fn numbers(variant: Variant, n: usize, method: Method) -> OutputDocument {
    let basis = FactorialBasis::new(variant.family(), n + 1);
    let rows = match method {
        Method::Series | Method::Recursive => {
            let values = if method == Method::Series {
                basis.numbers_series(n)
            } else {
                basis.numbers_recursive(n)
            };
            Rows::Numbers(
                values
                    .into_iter()
                    .enumerate()
                    .map(|(n, v)| NumberRow { n, value: v.into() })
                    .collect(),
            )
        }
        Method::Both => {
            let series = basis.numbers_series(n);
            let recursive = basis.numbers_recursive(n);
            Rows::NumberPairs(
                series
                    .into_iter()
                    .zip(recursive)
                    .enumerate()
                    .map(|(n, (s, r))| NumberPairRow {
                        n,
                        matches: s == r,
                        series: s.into(),
                        recursive: r.into(),
                    })
                    .collect(),
            )
        }
    };
    let metadata = Metadata {
        method: Some(method.as_str().to_string()),
        ..meta(variant, n)
    };
    OutputDocument::new(metadata, rows)
}

pub fn poly(variant: Variant, n: usize) -> OutputDocument {
    let table = BernoulliTable::new(variant.family(), n);
    let p = table.polynomial(n);
    let row = PolynomialRow {
        n,
        coefficients: p.coeffs().iter().cloned().map(Exact).collect(),
        rendered: p.render("x", Notation::Plain),
        latex: p.render("x", Notation::Latex),
    };
    let metadata = Metadata {
        method: Some("sum".to_string()),
        ..meta(variant, n)
    };
    OutputDocument::new(metadata, Rows::Polynomials(vec![row]))
}

pub fn eval(variant: Variant, n: usize, x: &Rational) -> OutputDocument {
    let table = BernoulliTable::new(variant.family(), n);
    let row = EvaluationRow {
        n,
        x: Exact(x.clone()),
        value: table.eval(n, x).into(),
    };
    let metadata = Metadata {
        x: Some(Exact(x.clone())),
        ..meta(variant, n)
    };
    OutputDocument::new(metadata, Rows::Evaluation(vec![row]))
}

pub fn fibonomial(n: usize) -> OutputDocument {
    let table = FibTable::new(n);
    let rows = (0..=n)
        .map(|row| FibonomialRow {
            n: row,
            entries: table
                .fibonomial_row(row)
                .into_iter()
                .map(|v| Exact(v.into()))
                .collect(),
        })
        .collect();
    let metadata = Metadata {
        n: Some(n),
        ..Metadata::default()
    };
    OutputDocument::new(metadata, Rows::Fibonomials(rows))
}

pub fn binomial(n: usize) -> OutputDocument {
    let expansion = golden_binomial(n);
    let rows = expansion
        .terms
        .iter()
        .map(|t| BinomialRow {
            k: t.k,
            sign: t.sign,
            coefficient: Exact(t.coefficient.clone().into()),
            term: expansion.render_term(t),
        })
        .collect();
    let metadata = Metadata {
        n: Some(n),
        rendered: Some(expansion.to_string()),
        ..Metadata::default()
    };
    OutputDocument::new(metadata, Rows::Binomial(rows))
}

fn report_row(r: &VerificationReport) -> VerificationRow {
    VerificationRow {
        identity: r.identity.to_string(),
        statement: r.statement.to_string(),
        first: *r.degrees.start(),
        last: *r.degrees.end(),
        checked: r.outcomes.len(),
        status: if r.passed() {
            Status::Pass
        } else {
            Status::Fail
        },
        failed: r.failed_degrees(),
        counterexample: r.counterexample.as_ref().map(|c| CounterexampleRow {
            n: c.n,
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        }),
    }
}

/// Runs the Bernoulli identities and the Fibonacci/series property suites.
///
/// `corrupt` perturbs `b_k^F` before checking, to exercise the failure path;
/// it must not exceed `2N`.
pub fn verify(n: usize, corrupt: Option<usize>) -> (OutputDocument, bool) {
    let mut inputs = IdentityInputs::build(n);
    if let Some(k) = corrupt {
        inputs.fib = inputs.fib.with_corrupted_number(k);
    }
    let mut reports = verify::verify_inputs(&inputs);
    reports.extend(verify::verify_core_properties(n));
    let passed = verify::all_passed(&reports);
    let metadata = Metadata {
        n: Some(n),
        passed: Some(passed),
        ..Metadata::default()
    };
    let rows = Rows::Verification(reports.iter().map(report_row).collect());
    (OutputDocument::new(metadata, rows), passed)
}
