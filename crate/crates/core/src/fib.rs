//! Fibonacci numbers, Fibonacci factorials and Fibonomial coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::golden::GoldenNumber;
use crate::rational::Rational;
use crate::ring::Ring;

/// Precomputed `F_0..=F_N` and `F_0!..=F_N!`.
///
/// `F_0 = 0` and `F_0! = 1`. The table is immutable once built; lookups past
/// the bound panic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibTable {
    values: Vec<BigInt>,
    factorials: Vec<BigInt>,
}

impl FibTable {
    pub fn new(max_n: usize) -> Self {
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(BigInt::zero());
        if max_n >= 1 {
            values.push(BigInt::one());
        }
        for n in 2..=max_n {
            let next = &values[n - 1] + &values[n - 2];
            values.push(next);
        }
        let mut factorials = Vec::with_capacity(max_n + 1);
        factorials.push(BigInt::one());
        for n in 1..=max_n {
            let next = &factorials[n - 1] * &values[n];
            factorials.push(next);
        }
        FibTable { values, factorials }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn fib(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn factorial(&self, n: usize) -> &BigInt {
        &self.factorials[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn factorials(&self) -> &[BigInt] {
        &self.factorials
    }

    /// `[n choose k]_F = F_n! / (F_{n-k}! F_k!)`, checked to divide exactly.
    pub fn fibonomial(&self, n: usize, k: usize) -> Result<BigInt> {
        if k > n {
            return Err(Error::FibonomialRange { n, k });
        }
        let den = &self.factorials[n - k] * &self.factorials[k];
        exact_div(&self.factorials[n], &den)
    }

    /// Row `n` of the Fibonomial triangle.
    pub fn fibonomial_row(&self, n: usize) -> Vec<BigInt> {
        (0..=n)
            .map(|k| self.fibonomial(n, k).expect("k <= n"))
            .collect()
    }

    /// First Golden Pascal recursion:
    /// `(−1/φ)^k [n−1 choose k]_F + φ^(n−k) [n−1 choose k−1]_F`.
    pub fn fibonomial_rec_a(&self, n: usize, k: usize) -> Result<GoldenNumber> {
        self.pascal(n, k, |k, nk| {
            (
                GoldenNumber::phi_conjugate().pow(k),
                GoldenNumber::phi().pow(nk),
            )
        })
    }

    /// Second Golden Pascal recursion:
    /// `φ^k [n−1 choose k]_F + (−1/φ)^(n−k) [n−1 choose k−1]_F`.
    pub fn fibonomial_rec_b(&self, n: usize, k: usize) -> Result<GoldenNumber> {
        self.pascal(n, k, |k, nk| {
            (
                GoldenNumber::phi().pow(k),
                GoldenNumber::phi_conjugate().pow(nk),
            )
        })
    }

    fn pascal(
        &self,
        n: usize,
        k: usize,
        weights: impl Fn(u32, u32) -> (GoldenNumber, GoldenNumber),
    ) -> Result<GoldenNumber> {
        if k == 0 || k + 1 > n {
            return Err(Error::PascalRange { n, k });
        }
        let (w_keep, w_shift) = weights(k as u32, (n - k) as u32);
        let keep = GoldenNumber::from(Rational::from(self.fibonomial(n - 1, k)?));
        let shift = GoldenNumber::from(Rational::from(self.fibonomial(n - 1, k - 1)?));
        Ok(w_keep * &keep + w_shift * &shift)
    }
}

pub(crate) fn exact_div(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            numerator: num.to_string(),
            denominator: den.to_string(),
        })
    }
}

/// `F_n` by the additive recurrence.
pub fn fib(n: usize) -> BigInt {
    FibTable::new(n).fib(n).clone()
}

/// `F_n` through Binet's formula `(φⁿ − φ′ⁿ)/(φ − φ′)` evaluated in Q(√5).
///
/// Fails if the result keeps a √5 component.
pub fn binet(n: usize) -> Result<Rational> {
    let n = u32::try_from(n).expect("Binet exponent fits in u32");
    let phi = GoldenNumber::phi();
    let psi = GoldenNumber::phi_conjugate();
    let den = (phi.clone() - psi.clone())
        .inverse()
        .expect("phi - phi' = sqrt(5) is invertible");
    let value = (phi.pow(n) - psi.pow(n)) * &den;
    value.to_rational("Binet formula")
}

/// `F_n! = F_1 F_2 ⋯ F_n`, with `F_0! = 1`.
pub fn fib_factorial(n: usize) -> BigInt {
    FibTable::new(n).factorial(n).clone()
}

pub fn fibonomial(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::FibonomialRange { n, k });
    }
    FibTable::new(n).fibonomial(n, k)
}

pub fn fibonomial_rec_a(n: usize, k: usize) -> Result<GoldenNumber> {
    FibTable::new(n).fibonomial_rec_a(n, k)
}

pub fn fibonomial_rec_b(n: usize, k: usize) -> Result<GoldenNumber> {
    FibTable::new(n).fibonomial_rec_b(n, k)
}
