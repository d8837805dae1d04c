//! Inputs shared by the benchmarks.

use golden_core::{FibTable, Polynomial, Rational, TruncatedSeries};

/// `(e_F^z − 1)/z` to the given order, the series inverted to get `b_n^F`.
pub fn shifted_golden_exponential(order: usize) -> TruncatedSeries<Rational> {
    let table = FibTable::new(order + 1);
    TruncatedSeries::from_fn(order, |k| {
        Rational::new(1, table.factorial(k + 1).clone()).unwrap()
    })
}

pub fn random_polynomials(count: usize, max_degree: usize) -> Vec<Polynomial<Rational>> {
    golden_core::verify::random_polynomials(7, count, max_degree, 1_000_000)
}
