//! Bernoulli-Fibonacci numbers and polynomials, plus the classical
//! Bernoulli family built on the same series machinery.
//!
//! Both families come from `z e^{zx} / (e^z − 1) = ∑ B_n(x) zⁿ / fₙ`, where
//! the exponential is `∑ zⁿ / fₙ` and `fₙ` is either `n!` (classical) or the
//! Fibonacci factorial `F_n!`.

use num_bigint::BigInt;
use num_traits::One;

use crate::calculus::exponential_in_x;
use crate::fib::{exact_div, FibTable};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::series::TruncatedSeries;

/// Which factorial the exponential and binomials are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `F_n!`, Fibonomials and the Golden derivative.
    Fibonacci,
    /// `n!`, binomials and the ordinary derivative.
    Classical,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Fibonacci => "fib",
            Family::Classical => "classical",
        }
    }
}

/// The integer sequence `wₙ` (`F_n` or `n`) and its factorials `fₙ = w₁⋯wₙ`,
/// with the binomials `fₙ / (f_{n−k} f_k)` they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialBasis {
    family: Family,
    weights: Vec<BigInt>,
    factorials: Vec<BigInt>,
}

impl FactorialBasis {
    pub fn new(family: Family, max_n: usize) -> Self {
        match family {
            Family::Fibonacci => FactorialBasis::from_fib_table(&FibTable::new(max_n)),
            Family::Classical => {
                let weights: Vec<BigInt> = (0..=max_n).map(BigInt::from).collect();
                let mut factorials = vec![BigInt::one()];
                for n in 1..=max_n {
                    let next = &factorials[n - 1] * &weights[n];
                    factorials.push(next);
                }
                FactorialBasis {
                    family,
                    weights,
                    factorials,
                }
            }
        }
    }

    pub fn from_fib_table(table: &FibTable) -> Self {
        FactorialBasis {
            family: Family::Fibonacci,
            weights: table.values().to_vec(),
            factorials: table.factorials().to_vec(),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn max_n(&self) -> usize {
        self.weights.len() - 1
    }

    /// `F_n` or `n`.
    pub fn weight(&self, n: usize) -> &BigInt {
        &self.weights[n]
    }

    pub fn factorial(&self, n: usize) -> &BigInt {
        &self.factorials[n]
    }

    pub fn factorials(&self) -> &[BigInt] {
        &self.factorials
    }

    /// `[n choose k]_F` or `(n choose k)`; `k ≤ n` is required.
    pub fn binomial(&self, n: usize, k: usize) -> BigInt {
        assert!(k <= n, "binomial({n}, {k}) needs k <= n");
        let den = &self.factorials[n - k] * &self.factorials[k];
        exact_div(&self.factorials[n], &den).expect("factorial-ratio binomials are integers")
    }

    /// The derivative matching the family: `D_F` or `d/dx`.
    pub fn derivative(&self, p: &Polynomial<Rational>) -> Polynomial<Rational> {
        p.weighted_derivative(|n| Rational::from(self.weights[n].clone()))
    }

    /// `(e^z − 1)/z` to order `N`: coefficient `k` is `1 / f_{k+1}`.
    fn shifted_exponential(&self, order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_fn(order, |k| {
            Rational::new(BigInt::one(), self.factorials[k + 1].clone()).unwrap()
        })
    }

    /// `z / (e^z − 1)` to order `N`, the common factor of both generating
    /// functions. Requires `max_n() ≥ N + 1`.
    fn bernoulli_kernel(&self, order: usize) -> TruncatedSeries<Rational> {
        self.shifted_exponential(order)
            .inverse()
            .expect("constant term 1/f_1 = 1 is a unit")
    }

    /// `b₀..=b_N` by series inversion: `bₙ = fₙ · [zⁿ] z/(e^z − 1)`.
    pub fn numbers_series(&self, order: usize) -> Vec<Rational> {
        self.bernoulli_kernel(order)
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(n, c)| c * Rational::from(self.factorials[n].clone()))
            .collect()
    }

    /// `b₀..=b_N` by solving `∑_{j<n} (n choose j) b_j = 0` for `b_{n−1}`,
    /// `n = 2..=N+1`. Requires `max_n() ≥ N + 1`.
    pub fn numbers_recursive(&self, order: usize) -> Vec<Rational> {
        let mut numbers = vec![Rational::one()];
        for n in 2..=order + 1 {
            let mut acc = Rational::zero();
            for (j, b) in numbers.iter().enumerate() {
                acc += &(Rational::from(self.binomial(n, j)) * b);
            }
            let lead = Rational::from(self.binomial(n, n - 1));
            numbers.push(-(acc / lead));
        }
        numbers
    }

    /// `B_n(x) = ∑_j (n choose j) b_j x^{n−j}` from `b₀..=b_n`.
    pub fn polynomial_from_numbers(&self, numbers: &[Rational], n: usize) -> Polynomial<Rational> {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (j, b) in numbers[..=n].iter().enumerate() {
            coeffs[n - j] = Rational::from(self.binomial(n, j)) * b;
        }
        Polynomial::new(coeffs)
    }

    /// `B₀..=B_N` as `fₙ · [zⁿ] e^{zx} · z/(e^z − 1)`, extracted from the
    /// bivariate product series.
    pub fn polynomials_genfunc(&self, order: usize) -> Vec<Polynomial<Rational>> {
        let kernel = self
            .bernoulli_kernel(order)
            .map(|c| Polynomial::constant(c.clone()));
        exponential_in_x(&self.factorials, order)
            .mul(&kernel)
            .into_coeffs()
            .into_iter()
            .enumerate()
            .map(|(n, p)| p.scale(&Rational::from(self.factorials[n].clone())))
            .collect()
    }
}

/// Bottom-up table of `b₀..=b_N` and `B₀(x)..=B_N(x)` for one family.
///
/// Numbers come from series inversion and polynomials from the explicit sum
/// over them; the independent routes live in [`FactorialBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    basis: FactorialBasis,
    numbers: Vec<Rational>,
    polynomials: Vec<Polynomial<Rational>>,
}

impl BernoulliTable {
    pub fn new(family: Family, max_n: usize) -> Self {
        let basis = FactorialBasis::new(family, max_n + 1);
        let numbers = basis.numbers_series(max_n);
        let polynomials = (0..=max_n)
            .map(|n| basis.polynomial_from_numbers(&numbers, n))
            .collect();
        BernoulliTable {
            basis,
            numbers,
            polynomials,
        }
    }

    pub fn fibonacci(max_n: usize) -> Self {
        BernoulliTable::new(Family::Fibonacci, max_n)
    }

    pub fn classical(max_n: usize) -> Self {
        BernoulliTable::new(Family::Classical, max_n)
    }

    pub fn family(&self) -> Family {
        self.basis.family
    }

    pub fn max_n(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn basis(&self) -> &FactorialBasis {
        &self.basis
    }

    pub fn numbers(&self) -> &[Rational] {
        &self.numbers
    }

    pub fn polynomials(&self) -> &[Polynomial<Rational>] {
        &self.polynomials
    }

    pub fn number(&self, n: usize) -> &Rational {
        &self.numbers[n]
    }

    pub fn polynomial(&self, n: usize) -> &Polynomial<Rational> {
        &self.polynomials[n]
    }

    pub fn eval(&self, n: usize, x: &Rational) -> Rational {
        self.polynomials[n].eval(x)
    }

    /// `H_n(x) = ∑_{k=0}^{n} (n choose k) B_{n−k}(x)`.
    pub fn h_sum(&self, n: usize) -> Polynomial<Rational> {
        let mut acc = Polynomial::zero();
        for k in 0..=n {
            acc += &self.polynomials[n - k].scale(&Rational::from(self.basis.binomial(n, k)));
        }
        acc
    }

    /// `H_n(x) = xⁿ + ∑_{j=2}^{n} (n choose j) b_j x^{n−j}`.
    pub fn h_explicit(&self, n: usize) -> Polynomial<Rational> {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        for j in 2..=n {
            coeffs[n - j] = Rational::from(self.basis.binomial(n, j)) * &self.numbers[j];
        }
        Polynomial::new(coeffs)
    }

    /// Replaces `b_n` by `b_n + 1` without touching the polynomials. Used to
    /// exercise failure reporting of the identity checks.
    pub fn with_corrupted_number(mut self, n: usize) -> Self {
        self.numbers[n] += &Rational::one();
        self
    }
}

pub fn bf_numbers_series(order: usize) -> Vec<Rational> {
    FactorialBasis::new(Family::Fibonacci, order + 1).numbers_series(order)
}

pub fn bf_numbers_recursive(order: usize) -> Vec<Rational> {
    FactorialBasis::new(Family::Fibonacci, order + 1).numbers_recursive(order)
}

/// `B_nᶠ(x)` from the Fibonomial sum over `b₀ᶠ..=b_nᶠ`.
pub fn bf_polynomial(n: usize) -> Polynomial<Rational> {
    BernoulliTable::fibonacci(n).polynomial(n).clone()
}

/// `B_nᶠ(x)` from the generating function `z e_F^{zx} / (e_F^z − 1)`.
pub fn bf_polynomial_genfunc(n: usize) -> Polynomial<Rational> {
    bf_polynomials_genfunc(n)
        .pop()
        .expect("order n yields n + 1 polynomials")
}

pub fn bf_polynomials_genfunc(order: usize) -> Vec<Polynomial<Rational>> {
    FactorialBasis::new(Family::Fibonacci, order + 1).polynomials_genfunc(order)
}

pub fn bf_eval(n: usize, x: &Rational) -> Rational {
    bf_polynomial(n).eval(x)
}

pub fn h_polynomial_sum(n: usize) -> Polynomial<Rational> {
    BernoulliTable::fibonacci(n).h_sum(n)
}

pub fn h_polynomial_explicit(n: usize) -> Polynomial<Rational> {
    BernoulliTable::fibonacci(n).h_explicit(n)
}

pub fn classical_bernoulli_numbers(order: usize) -> Vec<Rational> {
    FactorialBasis::new(Family::Classical, order + 1).numbers_series(order)
}

pub fn classical_bernoulli_numbers_recursive(order: usize) -> Vec<Rational> {
    FactorialBasis::new(Family::Classical, order + 1).numbers_recursive(order)
}

pub fn classical_bernoulli_polynomial(n: usize) -> Polynomial<Rational> {
    BernoulliTable::classical(n).polynomial(n).clone()
}
