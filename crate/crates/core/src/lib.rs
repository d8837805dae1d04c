//! Exact Golden (Fibonacci) calculus.
//!
//! Fibonacci numbers and Fibonomials ([`fib`]), the field Q(√5)
//! ([`GoldenNumber`]), polynomials and truncated power series over exact
//! rings, the Golden derivative and exponential ([`calculus`]), and
//! Bernoulli-Fibonacci numbers and polynomials computed by independent routes
//! ([`bernoulli`]) with identity checks ([`verify`]).
//!
//! ```
//! use golden_core::{bf_numbers_series, Rational};
//!
//! let b = bf_numbers_series(6);
//! assert_eq!(b[6], "101/39".parse::<Rational>().unwrap());
//! ```

pub mod bernoulli;
pub mod calculus;
pub mod error;
pub mod fib;
pub mod golden;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;
pub mod verify;

pub use bernoulli::{
    bf_eval, bf_numbers_recursive, bf_numbers_series, bf_polynomial, bf_polynomial_genfunc,
    bf_polynomials_genfunc, classical_bernoulli_numbers, classical_bernoulli_numbers_recursive,
    classical_bernoulli_polynomial, h_polynomial_explicit, h_polynomial_sum, BernoulliTable,
    FactorialBasis, Family,
};
pub use calculus::{
    golden_binomial, golden_derivative, golden_derivative_dilatation, golden_exponential,
    golden_exponential_in_x, BinomialTerm, GoldenBinomialExpansion,
};
pub use error::{Error, Result};
pub use fib::{
    binet, fib, fib_factorial, fibonomial, fibonomial_rec_a, fibonomial_rec_b, FibTable,
};
pub use golden::GoldenNumber;
pub use poly::{Notation, Polynomial};
pub use rational::Rational;
pub use ring::Ring;
pub use series::TruncatedSeries;
pub use verify::{verify_core_properties, verify_identities, VerificationReport};

pub use num_bigint::BigInt;
