//! Exact identity checks with structured, per-degree reports.

use std::fmt::Display;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernoulli::{BernoulliTable, FactorialBasis, Family};
use crate::calculus::{
    golden_derivative_dilatation, golden_derivative_with, golden_exponential_with,
};
use crate::error::Result;
use crate::fib::{binet, FibTable};
use crate::golden::GoldenNumber;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::TruncatedSeries;

/// Seed for the random polynomials fed to the Golden-derivative oracle.
pub const DILATATION_SEED: u64 = 0x5EED_F1B0;
/// Number of random polynomials fed to the Golden-derivative oracle.
pub const DILATATION_SAMPLES: usize = 200;
/// Numerator and denominator bound for random polynomial coefficients.
pub const DILATATION_COEFF_BOUND: i64 = 1_000_000;

/// The two unequal sides of the first failing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub statement: &'static str,
    /// Smallest and largest degree checked.
    pub degrees: RangeInclusive<usize>,
    /// `(n, passed)` in increasing `n`.
    pub outcomes: Vec<(usize, bool)>,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|&(_, ok)| ok)
    }

    pub fn failed_degrees(&self) -> Vec<usize> {
        self.outcomes
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|&(n, _)| n)
            .collect()
    }

    fn run<T, F>(
        identity: &'static str,
        statement: &'static str,
        degrees: impl IntoIterator<Item = usize>,
        check: F,
    ) -> Self
    where
        T: PartialEq + Display,
        F: Fn(usize) -> Result<(T, T)>,
    {
        let mut outcomes = Vec::new();
        let mut counterexample = None;
        for n in degrees {
            let (ok, sides) = match check(n) {
                Ok((lhs, rhs)) if lhs == rhs => (true, None),
                Ok((lhs, rhs)) => (false, Some((lhs.to_string(), rhs.to_string()))),
                Err(e) => (false, Some((format!("error: {e}"), String::new()))),
            };
            if let (None, Some((lhs, rhs))) = (&counterexample, sides) {
                counterexample = Some(Counterexample { n, lhs, rhs });
            }
            outcomes.push((n, ok));
        }
        let lo = outcomes.first().map_or(0, |&(n, _)| n);
        let hi = outcomes.last().map_or(0, |&(n, _)| n);
        VerificationReport {
            identity,
            statement,
            degrees: lo..=hi,
            outcomes,
            counterexample,
        }
    }
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(VerificationReport::passed)
}

/// Everything the Bernoulli identity checks consume, built once.
#[derive(Debug, Clone)]
pub struct IdentityInputs {
    pub bound: usize,
    /// Fibonacci family to `2N` (numbers by series inversion).
    pub fib: BernoulliTable,
    /// Fibonacci numbers to `2N` by the Fibonomial recursion.
    pub fib_recursive: Vec<Rational>,
    /// Fibonacci polynomials to `N` from the generating function.
    pub fib_genfunc: Vec<Polynomial<Rational>>,
    /// Classical family to `N`.
    pub classical: BernoulliTable,
    pub classical_recursive: Vec<Rational>,
}

impl IdentityInputs {
    pub fn build(bound: usize) -> Self {
        let fib = BernoulliTable::fibonacci(2 * bound);
        let fib_recursive = fib.basis().numbers_recursive(2 * bound);
        let fib_genfunc =
            FactorialBasis::new(Family::Fibonacci, bound + 1).polynomials_genfunc(bound);
        let classical = BernoulliTable::classical(bound);
        let classical_recursive = classical.basis().numbers_recursive(bound);
        IdentityInputs {
            bound,
            fib,
            fib_recursive,
            fib_genfunc,
            classical,
            classical_recursive,
        }
    }
}

/// Runs every Bernoulli-Fibonacci and classical identity up to degree `N`
/// (numbers up to `2N`). `N ≥ 2` is expected.
pub fn verify_identities(bound: usize) -> Vec<VerificationReport> {
    verify_inputs(&IdentityInputs::build(bound))
}

fn rat(n: &BigInt) -> Rational {
    Rational::from(n.clone())
}

pub fn verify_inputs(inputs: &IdentityInputs) -> Vec<VerificationReport> {
    let n_max = inputs.bound;
    let n2 = 2 * n_max;
    let t = &inputs.fib;
    let basis = t.basis();
    let c = &inputs.classical;
    let cb = c.basis();
    let one = Rational::one();

    let mut reports = vec![
        VerificationReport::run(
            "bf_numbers_cross_method",
            "series inversion b_n^F = Fibonomial recursion b_n^F",
            0..=n2,
            |n| Ok((t.number(n).clone(), inputs.fib_recursive[n].clone())),
        ),
        VerificationReport::run(
            "bf_polynomials_cross_method",
            "explicit Fibonomial sum B_n^F = generating-function B_n^F",
            0..=n_max,
            |n| Ok((t.polynomial(n).clone(), inputs.fib_genfunc[n].clone())),
        ),
        VerificationReport::run(
            "golden_derivative",
            "D_F B_n^F(x) = F_n B_{n-1}^F(x)",
            1..=n_max,
            |n| {
                Ok((
                    basis.derivative(t.polynomial(n)),
                    t.polynomial(n - 1).scale(&rat(basis.weight(n))),
                ))
            },
        ),
        VerificationReport::run(
            "summation",
            "sum_{l<n} [n,l]_F B_l^F(x) = F_n x^{n-1}",
            1..=n_max,
            |n| {
                let mut lhs = Polynomial::zero();
                for l in 0..n {
                    lhs += &t.polynomial(l).scale(&rat(&basis.binomial(n, l)));
                }
                Ok((lhs, Polynomial::monomial(rat(basis.weight(n)), n - 1)))
            },
        ),
        VerificationReport::run(
            "inductive_numbers",
            "sum_{j<n} [n,j]_F b_j^F = 0",
            2..=n2,
            |n| {
                let mut lhs = Rational::zero();
                for j in 0..n {
                    lhs += &(rat(&basis.binomial(n, j)) * t.number(j));
                }
                Ok((lhs, Rational::zero()))
            },
        ),
        VerificationReport::run(
            "value_at_one",
            "B_n^F(1) = b_n^F for n >= 2",
            2..=n_max,
            |n| Ok((t.eval(n, &one), t.number(n).clone())),
        ),
        VerificationReport::run(
            "h_polynomial_sum",
            "sum_k [n,k]_F B_{n-k}^F(x) = B_n^F(x) + F_n x^{n-1}",
            1..=n_max,
            |n| Ok((t.h_sum(n), h_target(t, n))),
        ),
        VerificationReport::run(
            "h_polynomial_explicit",
            "x^n + sum_{j>=2} [n,j]_F b_j^F x^{n-j} = B_n^F(x) + F_n x^{n-1}",
            1..=n_max,
            |n| Ok((t.h_explicit(n), h_target(t, n))),
        ),
        VerificationReport::run("constant_term", "B_n^F(0) = b_n^F", 0..=n2, |n| {
            Ok((t.polynomial(n).coeff(0), t.number(n).clone()))
        }),
    ];

    reports.extend([
        VerificationReport::run(
            "classical_numbers_cross_method",
            "series inversion b_n = binomial recursion b_n",
            0..=n_max,
            |n| Ok((c.number(n).clone(), inputs.classical_recursive[n].clone())),
        ),
        VerificationReport::run(
            "classical_odd_vanish",
            "b_{2k+1} = 0 for k >= 1",
            (3..=n_max).step_by(2),
            |n| Ok((c.number(n).clone(), Rational::zero())),
        ),
        VerificationReport::run(
            "classical_inductive_numbers",
            "sum_{j<n} (n,j) b_j = 0",
            2..=n_max,
            |n| {
                let mut lhs = Rational::zero();
                for j in 0..n {
                    lhs += &(rat(&cb.binomial(n, j)) * c.number(j));
                }
                Ok((lhs, Rational::zero()))
            },
        ),
        VerificationReport::run(
            "classical_value_at_one",
            "B_n(1) = b_n for n >= 2",
            2..=n_max,
            |n| Ok((c.eval(n, &one), c.number(n).clone())),
        ),
        VerificationReport::run(
            "classical_derivative",
            "d/dx B_n(x) = n B_{n-1}(x)",
            1..=n_max,
            |n| {
                Ok((
                    c.polynomial(n).derivative(),
                    c.polynomial(n - 1).scale(&Rational::from(n as i64)),
                ))
            },
        ),
    ]);
    reports
}

fn h_target(t: &BernoulliTable, n: usize) -> Polynomial<Rational> {
    t.polynomial(n).clone() + Polynomial::monomial(rat(t.basis().weight(n)), n - 1)
}

/// Deterministic random rational polynomials of degree `≤ max_degree`.
pub fn random_polynomials(
    seed: u64,
    count: usize,
    max_degree: usize,
    coeff_bound: i64,
) -> Vec<Polynomial<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            Polynomial::new(
                (0..=degree)
                    .map(|_| {
                        let num = rng.gen_range(-coeff_bound..=coeff_bound);
                        let den = rng.gen_range(1..=coeff_bound);
                        Rational::new(num, den).unwrap()
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Fibonacci, Fibonomial, Golden-derivative and series checks scaled from
/// `N`: Binet to `8N`, Fibonomial symmetry to `2N`, Pascal recursions and
/// derivative oracle to `N`.
pub fn verify_core_properties(bound: usize) -> Vec<VerificationReport> {
    let fib_table = FibTable::new(8 * bound);
    let samples = random_polynomials(
        DILATATION_SEED,
        DILATATION_SAMPLES,
        bound,
        DILATATION_COEFF_BOUND,
    );
    let exp_x = crate::calculus::golden_exponential_in_x(bound);
    let exp = golden_exponential_with(&fib_table, bound);
    let product = exp.mul(&exp.inverse().expect("e_F has constant term 1"));

    vec![
        VerificationReport::run("binet", "Binet(n) = F_n", 0..=8 * bound, |n| {
            Ok((binet(n)?, rat(fib_table.fib(n))))
        }),
        VerificationReport::run(
            "fibonomial_symmetry",
            "[n,k]_F = [n,n-k]_F, exact integer quotients",
            0..=2 * bound,
            |n| {
                let row = (0..=n)
                    .map(|k| fib_table.fibonomial(n, k))
                    .collect::<Result<Vec<_>>>()?;
                let reversed: Vec<_> = row.iter().rev().cloned().collect();
                Ok((join(&row), join(&reversed)))
            },
        ),
        VerificationReport::run(
            "pascal_recursion_a",
            "[n,k]_F = (-1/phi)^k [n-1,k]_F + phi^(n-k) [n-1,k-1]_F",
            2..=bound.max(2),
            |n| pascal_row(&fib_table, n, FibTable::fibonomial_rec_a),
        ),
        VerificationReport::run(
            "pascal_recursion_b",
            "[n,k]_F = phi^k [n-1,k]_F + (-1/phi)^(n-k) [n-1,k-1]_F",
            2..=bound.max(2),
            |n| pascal_row(&fib_table, n, FibTable::fibonomial_rec_b),
        ),
        VerificationReport::run(
            "golden_derivative_oracle",
            "coefficient rule D_F = dilatation-quotient D_F on random polynomials (n = sample index)",
            0..=DILATATION_SAMPLES - 1,
            |i| {
                let p = &samples[i];
                Ok((golden_derivative_with(&fib_table, p), golden_derivative_dilatation(p)?))
            },
        ),
        VerificationReport::run(
            "golden_exponential_eigen",
            "D_F [z^n] e_F^{zx} = [z^{n-1}] e_F^{zx}",
            1..=bound,
            |n| Ok((golden_derivative_with(&fib_table, exp_x.coeff(n)), exp_x.coeff(n - 1).clone())),
        ),
        VerificationReport::run(
            "series_inverse",
            "e_F^z * (e_F^z)^{-1} = 1 mod z^{N+1}",
            0..=bound,
            |n| Ok((product.coeff(n).clone(), TruncatedSeries::<Rational>::one(bound).coeff(n).clone())),
        ),
    ]
}

fn join(row: &[BigInt]) -> String {
    row.iter()
        .map(BigInt::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn pascal_row(
    table: &FibTable,
    n: usize,
    rec: fn(&FibTable, usize, usize) -> Result<GoldenNumber>,
) -> Result<(String, String)> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..n {
        lhs.push(rec(table, n, k)?.to_string());
        rhs.push(table.fibonomial(n, k)?.to_string());
    }
    Ok((lhs.join(","), rhs.join(",")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let reports = verify_identities(8);
        for r in &reports {
            assert!(r.passed(), "{} failed: {:?}", r.identity, r.counterexample);
            assert!(r.counterexample.is_none());
        }
        assert!(all_passed(&verify_core_properties(8)));
    }

    #[test]
    fn reports_are_ordered_by_degree() {
        for r in verify_identities(4) {
            let ns: Vec<usize> = r.outcomes.iter().map(|&(n, _)| n).collect();
            assert!(ns.windows(2).all(|w| w[0] < w[1]), "{}", r.identity);
            assert_eq!(ns.first(), Some(r.degrees.start()));
            assert_eq!(ns.last(), Some(r.degrees.end()));
        }
    }

    #[test]
    fn corrupted_number_yields_counterexample() {
        let mut inputs = IdentityInputs::build(6);
        inputs.fib = inputs.fib.with_corrupted_number(3);
        let reports = verify_inputs(&inputs);
        assert!(!all_passed(&reports));
        let constant = reports
            .iter()
            .find(|r| r.identity == "constant_term")
            .unwrap();
        assert_eq!(constant.failed_degrees(), vec![3]);
        let cx = constant.counterexample.as_ref().unwrap();
        assert_eq!((cx.n, cx.lhs.as_str(), cx.rhs.as_str()), (3, "-1/3", "2/3"));
    }

    #[test]
    fn random_polynomials_are_reproducible() {
        let a = random_polynomials(1, 5, 10, 100);
        let b = random_polynomials(1, 5, 10, 100);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.degree().unwrap_or(0) <= 10));
    }
}
