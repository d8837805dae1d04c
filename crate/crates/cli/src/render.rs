//! CSV, LaTeX and plain-text renderings of an [`OutputDocument`].

use std::fmt::Write as _;

use golden_core::Rational;

use crate::document::{Exact, Metadata, OutputDocument, Rows, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
    Plain,
}

pub fn render(doc: &OutputDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Csv => to_csv(doc),
        Format::Latex => to_latex(doc),
        Format::Plain => to_plain(doc),
    }
}

fn csv_table(header: &[&str], records: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in records {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

/// One header row, then one record per row. List-valued rows are expanded
/// into long form (one record per entry).
pub fn to_csv(doc: &OutputDocument) -> String {
    match &doc.rows {
        Rows::Numbers(rows) => csv_table(
            &["n", "value"],
            rows.iter()
                .map(|r| vec![r.n.to_string(), r.value.to_string()]),
        ),
        Rows::NumberPairs(rows) => csv_table(
            &["n", "series", "recursive", "match"],
            rows.iter().map(|r| {
                vec![
                    r.n.to_string(),
                    r.series.to_string(),
                    r.recursive.to_string(),
                    r.matches.to_string(),
                ]
            }),
        ),
        Rows::Polynomials(rows) => csv_table(
            &["n", "power", "coefficient"],
            rows.iter().flat_map(|r| {
                r.coefficients
                    .iter()
                    .enumerate()
                    .map(move |(i, c)| vec![r.n.to_string(), i.to_string(), c.to_string()])
            }),
        ),
        Rows::Evaluation(rows) => csv_table(
            &["n", "x", "value"],
            rows.iter()
                .map(|r| vec![r.n.to_string(), r.x.to_string(), r.value.to_string()]),
        ),
        Rows::Fibonomials(rows) => csv_table(
            &["n", "k", "value"],
            rows.iter().flat_map(|r| {
                r.entries
                    .iter()
                    .enumerate()
                    .map(move |(k, v)| vec![r.n.to_string(), k.to_string(), v.to_string()])
            }),
        ),
        Rows::Binomial(rows) => csv_table(
            &["k", "sign", "coefficient", "term"],
            rows.iter().map(|r| {
                vec![
                    r.k.to_string(),
                    r.sign.to_string(),
                    r.coefficient.to_string(),
                    r.term.clone(),
                ]
            }),
        ),
        Rows::Verification(rows) => csv_table(
            &[
                "identity",
                "first",
                "last",
                "checked",
                "status",
                "counterexample_n",
                "lhs",
                "rhs",
            ],
            rows.iter().map(|r| {
                let (cn, lhs, rhs) = match &r.counterexample {
                    Some(c) => (c.n.to_string(), c.lhs.clone(), c.rhs.clone()),
                    None => Default::default(),
                };
                vec![
                    r.identity.clone(),
                    r.first.to_string(),
                    r.last.to_string(),
                    r.checked.to_string(),
                    status_str(r.status).to_string(),
                    cn,
                    lhs,
                    rhs,
                ]
            }),
        ),
    }
}

pub fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_string();
    }
    let sign = if r.is_negative() { "-" } else { "" };
    let mag = r.abs();
    format!(
        "{sign}\\frac{{{}}}{{{}}}",
        mag.numerator(),
        mag.denominator()
    )
}

fn latex_exact(e: &Exact) -> String {
    latex_rational(&e.0)
}

/// `x^12 y` becomes `x^{12} y`.
fn brace_exponents(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

fn symbol(meta: &Metadata, letter: char, n: impl std::fmt::Display) -> String {
    match meta.variant.as_deref() {
        Some("classical") => format!("{letter}_{{{n}}}"),
        _ => format!("{letter}_{{{n}}}^{{F}}"),
    }
}

/// A standalone LaTeX document holding a `tabular` or `align*` body.
pub fn to_latex(doc: &OutputDocument) -> String {
    let meta = &doc.metadata;
    let mut body = String::new();
    match &doc.rows {
        Rows::Numbers(rows) => {
            body.push_str("\\begin{tabular}{rr}\n");
            let _ = writeln!(body, "$n$ & ${}$ \\\\ \\hline", symbol(meta, 'b', "n"));
            for r in rows {
                let _ = writeln!(body, "{} & ${}$ \\\\", r.n, latex_exact(&r.value));
            }
            body.push_str("\\end{tabular}\n");
        }
        Rows::NumberPairs(rows) => {
            body.push_str("\\begin{tabular}{rrrl}\n");
            body.push_str("$n$ & series & recursive & match \\\\ \\hline\n");
            for r in rows {
                let _ = writeln!(
                    body,
                    "{} & ${}$ & ${}$ & {} \\\\",
                    r.n,
                    latex_exact(&r.series),
                    latex_exact(&r.recursive),
                    if r.matches { "yes" } else { "no" }
                );
            }
            body.push_str("\\end{tabular}\n");
        }
        Rows::Polynomials(rows) => {
            body.push_str("\\begin{align*}\n");
            for (i, r) in rows.iter().enumerate() {
                let end = if i + 1 < rows.len() { " \\\\" } else { "" };
                let _ = writeln!(body, "{}(x) &= {}{end}", symbol(meta, 'B', r.n), r.latex);
            }
            body.push_str("\\end{align*}\n");
        }
        Rows::Evaluation(rows) => {
            body.push_str("\\begin{align*}\n");
            for (i, r) in rows.iter().enumerate() {
                let end = if i + 1 < rows.len() { " \\\\" } else { "" };
                let _ = writeln!(
                    body,
                    "{}\\left({}\\right) &= {}{end}",
                    symbol(meta, 'B', r.n),
                    latex_exact(&r.x),
                    latex_exact(&r.value)
                );
            }
            body.push_str("\\end{align*}\n");
        }
        Rows::Fibonomials(rows) => {
            let cols = rows.last().map_or(1, |r| r.entries.len());
            let _ = writeln!(body, "\\begin{{tabular}}{{r|{}}}", "r".repeat(cols));
            let header: Vec<String> = (0..cols).map(|k| format!("${k}$")).collect();
            let _ = writeln!(
                body,
                "$n \\backslash k$ & {} \\\\ \\hline",
                header.join(" & ")
            );
            for r in rows {
                let mut cells: Vec<String> = r.entries.iter().map(|e| e.to_string()).collect();
                cells.resize(cols, String::new());
                let _ = writeln!(body, "{} & {} \\\\", r.n, cells.join(" & "));
            }
            body.push_str("\\end{tabular}\n");
        }
        Rows::Binomial(_) => {
            let n = meta.n.unwrap_or(0);
            let rendered = meta.rendered.as_deref().unwrap_or("");
            body.push_str("\\begin{align*}\n");
            let _ = writeln!(body, "(x+y)_F^{{{n}}} &= {}", brace_exponents(rendered));
            body.push_str("\\end{align*}\n");
        }
        Rows::Verification(rows) => {
            body.push_str("\\begin{tabular}{lrrl}\n");
            body.push_str("identity & first & last & status \\\\ \\hline\n");
            for r in rows {
                let _ = writeln!(
                    body,
                    "{} & {} & {} & {} \\\\",
                    latex_escape(&r.identity),
                    r.first,
                    r.last,
                    status_str(r.status)
                );
            }
            body.push_str("\\end{tabular}\n");
        }
    }
    format!(
        "\\documentclass{{article}}\n\\usepackage{{amsmath}}\n\\begin{{document}}\n{body}\\end{{document}}\n"
    )
}

pub fn to_plain(doc: &OutputDocument) -> String {
    let meta = &doc.metadata;
    let fib = meta.variant.as_deref() != Some("classical");
    let sym = |letter: char, n: usize| {
        if fib {
            format!("{letter}_{n}^F")
        } else {
            format!("{letter}_{n}")
        }
    };
    let mut out = String::new();
    match &doc.rows {
        Rows::Numbers(rows) => {
            for r in rows {
                let _ = writeln!(out, "{} = {}", sym('b', r.n), r.value);
            }
        }
        Rows::NumberPairs(rows) => {
            for r in rows {
                let mark = if r.matches { "match" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "{} = {} (series) {} (recursive) {mark}",
                    sym('b', r.n),
                    r.series,
                    r.recursive
                );
            }
        }
        Rows::Polynomials(rows) => {
            for r in rows {
                let _ = writeln!(out, "{}(x) = {}", sym('B', r.n), r.rendered);
            }
        }
        Rows::Evaluation(rows) => {
            for r in rows {
                let _ = writeln!(out, "{}({}) = {}", sym('B', r.n), r.x, r.value);
            }
        }
        Rows::Fibonomials(rows) => {
            for r in rows {
                let cells: Vec<String> = r.entries.iter().map(|e| e.to_string()).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
        }
        Rows::Binomial(_) => {
            let _ = writeln!(
                out,
                "(x+y)_F^{} = {}",
                meta.n.unwrap_or(0),
                meta.rendered.as_deref().unwrap_or("")
            );
        }
        Rows::Verification(rows) => {
            for r in rows {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                let _ = writeln!(
                    out,
                    "{tag} {} [{}..={}] {}",
                    r.identity, r.first, r.last, r.statement
                );
                if let Some(c) = &r.counterexample {
                    let _ = writeln!(out, "     n={}: {} != {}", c.n, c.lhs, c.rhs);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_rationals() {
        assert_eq!(latex_rational(&"-1/3".parse().unwrap()), "-\\frac{1}{3}");
        assert_eq!(latex_rational(&"7".parse().unwrap()), "7");
    }

    #[test]
    fn exponents_get_braces() {
        assert_eq!(
            brace_exponents("x^12 + 3 x^3 y - y^2"),
            "x^{12} + 3 x^{3} y - y^{2}"
        );
    }
}
