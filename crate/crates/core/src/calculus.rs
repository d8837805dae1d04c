//! Golden derivative, Golden exponential and the Golden binomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::fib::FibTable;
use crate::golden::GoldenNumber;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// `D_F` by the coefficient rule `xⁿ ↦ F_n xⁿ⁻¹`.
pub fn golden_derivative(p: &Polynomial<Rational>) -> Polynomial<Rational> {
    let table = FibTable::new(p.degree().unwrap_or(0));
    golden_derivative_with(&table, p)
}

pub(crate) fn golden_derivative_with(
    table: &FibTable,
    p: &Polynomial<Rational>,
) -> Polynomial<Rational> {
    p.weighted_derivative(|n| Rational::from(table.fib(n).clone()))
}

/// `D_F` from its defining divided difference
/// `(f(φx) − f(−x/φ)) / ((φ + 1/φ)x)`, evaluated in Q(√5)[x].
///
/// Every √5 component must cancel; a surviving one is reported as an error.
pub fn golden_derivative_dilatation(p: &Polynomial<Rational>) -> Result<Polynomial<Rational>> {
    let lifted: Polynomial<GoldenNumber> = p.map(|c| GoldenNumber::from(c.clone()));
    let phi = GoldenNumber::phi();
    let phi_inv = phi.inverse().expect("phi is a unit");

    let numerator = lifted.substitute_scaled(&phi) - lifted.substitute_scaled(&(-phi_inv.clone()));
    let over_x = numerator
        .divide_by_x()
        .ok_or_else(|| Error::NotDivisibleByX {
            context: "golden derivative numerator".into(),
        })?;
    let scale = (phi + phi_inv).inverse().expect("phi + 1/phi = sqrt(5)");
    over_x
        .scale(&scale)
        .try_map(|c| c.to_rational("golden derivative coefficient"))
}

/// `e_F^z = ∑ zⁿ / F_n!` to order `N`.
pub fn golden_exponential(order: usize) -> TruncatedSeries<Rational> {
    golden_exponential_with(&FibTable::new(order), order)
}

pub(crate) fn golden_exponential_with(table: &FibTable, order: usize) -> TruncatedSeries<Rational> {
    TruncatedSeries::from_fn(order, |n| {
        Rational::new(BigInt::one(), table.factorial(n).clone()).unwrap()
    })
}

/// `e_F^{zx}` as a series in `z` whose `zⁿ` coefficient is `xⁿ / F_n!`.
pub fn golden_exponential_in_x(order: usize) -> TruncatedSeries<Polynomial<Rational>> {
    let table = FibTable::new(order);
    exponential_in_x(table.factorials(), order)
}

/// `∑ xⁿzⁿ / fₙ` for an arbitrary factorial sequence `f`.
pub(crate) fn exponential_in_x(
    factorials: &[BigInt],
    order: usize,
) -> TruncatedSeries<Polynomial<Rational>> {
    TruncatedSeries::from_fn(order, |n| {
        Polynomial::monomial(
            Rational::new(BigInt::one(), factorials[n].clone()).unwrap(),
            n,
        )
    })
}

/// One term `sign · coefficient · x^{n−k} y^k` of a Golden binomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialTerm {
    pub k: usize,
    /// `(−1)^{k(k−1)/2}`, either `1` or `-1`.
    pub sign: i8,
    pub coefficient: BigInt,
}

/// The expansion `(x + y)_Fⁿ = ∑ [n choose k]_F (−1)^{k(k−1)/2} x^{n−k} y^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenBinomialExpansion {
    pub n: usize,
    pub terms: Vec<BinomialTerm>,
}

pub fn golden_binomial(n: usize) -> GoldenBinomialExpansion {
    let table = FibTable::new(n);
    let terms = (0..=n)
        .map(|k| BinomialTerm {
            k,
            sign: golden_binomial_sign(k),
            coefficient: table.fibonomial(n, k).expect("k <= n"),
        })
        .collect();
    GoldenBinomialExpansion { n, terms }
}

/// `(−1)^{k(k−1)/2}`: the pattern `+, +, −, −` repeating with period 4.
pub fn golden_binomial_sign(k: usize) -> i8 {
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn power(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn monomial(n: usize, k: usize) -> String {
    let xs = power('x', n - k);
    let ys = power('y', k);
    if xs.contains('^') && !ys.is_empty() {
        format!("{xs} {ys}")
    } else {
        format!("{xs}{ys}")
    }
}

impl GoldenBinomialExpansion {
    /// Unsigned rendering of term `k`, e.g. `6 x^2 y^2` or `xy`.
    fn magnitude(&self, term: &BinomialTerm) -> String {
        let mono = monomial(self.n, term.k);
        if mono.is_empty() {
            term.coefficient.to_string()
        } else if term.coefficient.is_one() {
            mono
        } else {
            format!("{} {mono}", term.coefficient)
        }
    }

    /// Signed rendering of one term, e.g. `-6 x^2 y^2`.
    pub fn render_term(&self, term: &BinomialTerm) -> String {
        let mag = self.magnitude(term);
        if term.sign < 0 {
            format!("-{mag}")
        } else {
            mag
        }
    }
}

impl fmt::Display for GoldenBinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, term) in self.terms.iter().enumerate() {
            let mag = self.magnitude(term);
            match (i, term.sign < 0) {
                (0, false) => write!(f, "{mag}")?,
                (0, true) => write!(f, "-{mag}")?,
                (_, false) => write!(f, " + {mag}")?,
                (_, true) => write!(f, " - {mag}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn mono(c: &str, d: usize) -> Polynomial<Rational> {
        Polynomial::monomial(q(c), d)
    }

    fn rational_poly(max_len: usize) -> impl Strategy<Value = Polynomial<Rational>> {
        proptest::collection::vec((-1_000_000i64..=1_000_000, 1i64..=1_000_000), 0..=max_len)
            .prop_map(|v| {
                Polynomial::new(
                    v.into_iter()
                        .map(|(n, d)| Rational::new(n, d).unwrap())
                        .collect(),
                )
            })
    }

    #[test]
    fn derivative_of_constant_vanishes() {
        assert!(golden_derivative(&Polynomial::one()).is_zero());
        assert!(golden_derivative_dilatation(&mono("7/3", 0))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(golden_derivative(&mono("1", 3)), mono("2", 2));
        assert_eq!(
            golden_derivative(&(mono("1", 5) + mono("1", 1))),
            mono("5", 4) + mono("1", 0)
        );
    }

    #[test]
    fn dilatation_examples() {
        assert_eq!(
            golden_derivative_dilatation(&mono("1", 2)).unwrap(),
            mono("1", 1)
        );
        assert_eq!(
            golden_derivative_dilatation(&mono("1", 7)).unwrap(),
            mono("13", 6)
        );
        assert_eq!(
            golden_derivative_dilatation(&(mono("1", 5) + mono("1", 1))).unwrap(),
            mono("5", 4) + mono("1", 0)
        );
    }

    #[test]
    fn exponential_coefficients() {
        let e = golden_exponential(6);
        assert_eq!(e.coeff(0), &q("1"));
        assert_eq!(e.coeff(4), &q("1/6"));
        assert_eq!(e.coeff(5), &q("1/30"));
        assert_eq!(e.coeff(6), &q("1/240"));
    }

    #[test]
    fn exponential_in_x_coefficients() {
        let e = golden_exponential_in_x(5);
        assert_eq!(e.coeff(0), &Polynomial::one());
        assert_eq!(e.coeff(3), &mono("1/2", 3));
        assert_eq!(e.coeff(5), &mono("1/30", 5));
    }

    #[test]
    fn exponential_is_an_eigenfunction() {
        // D_F maps x^n/F_n! to x^{n-1}/F_{n-1}!, i.e. coefficient n of e_F^{zx}
        // goes to coefficient n-1: D_F e_F^{zx} = z e_F^{zx}.
        let e = golden_exponential_in_x(20);
        for n in 1..=20 {
            assert_eq!(golden_derivative(e.coeff(n)), *e.coeff(n - 1), "n={n}");
        }
    }

    #[test]
    fn binomial_examples() {
        let b0 = golden_binomial(0);
        assert_eq!(
            b0.terms,
            vec![BinomialTerm {
                k: 0,
                sign: 1,
                coefficient: 1.into()
            }]
        );
        assert_eq!(b0.to_string(), "1");

        let b2 = golden_binomial(2);
        let signs: Vec<i8> = b2.terms.iter().map(|t| t.sign).collect();
        assert_eq!(signs, vec![1, 1, -1]);
        assert_eq!(b2.to_string(), "x^2 + xy - y^2");

        let b4 = golden_binomial(4);
        assert_eq!(b4.terms[2].sign, -1);
        assert_eq!(b4.terms[2].coefficient, BigInt::from(6));
        assert_eq!(b4.render_term(&b4.terms[2]), "-6 x^2 y^2");
        assert_eq!(b4.to_string(), "x^4 + 3 x^3 y - 6 x^2 y^2 - 3 xy^3 + y^4");
    }

    #[test]
    fn binomial_signs_have_period_four() {
        let pattern = [1, 1, -1, -1];
        for k in 0..64 {
            assert_eq!(golden_binomial_sign(k), pattern[k % 4], "k={k}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn coefficient_rule_matches_dilatation(p in rational_poly(33)) {
            prop_assert_eq!(golden_derivative(&p), golden_derivative_dilatation(&p).unwrap());
        }

        #[test]
        fn derivative_is_linear(
            p in rational_poly(12),
            r in rational_poly(12),
            (an, ad) in (-100i64..100, 1i64..100),
            (bn, bd) in (-100i64..100, 1i64..100),
        ) {
            let a = Rational::new(an, ad).unwrap();
            let b = Rational::new(bn, bd).unwrap();
            let lhs = golden_derivative(&(p.scale(&a) + r.scale(&b)));
            let rhs = golden_derivative(&p).scale(&a) + golden_derivative(&r).scale(&b);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
