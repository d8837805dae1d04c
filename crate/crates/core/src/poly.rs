//! Dense univariate polynomials over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::rational::Rational;
use crate::ring::Ring;

/// A dense polynomial; `coeffs[i]` is the coefficient of `xⁱ`.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c·xᵈ`.
    pub fn monomial(c: R, degree: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![R::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `xⁱ`; zero past the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &R) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &R) -> R {
        self.coeffs.iter().rev().fold(R::zero(), |acc, c| {
            let mut next = acc * x;
            next += c;
            next
        })
    }

    /// `p(s·x)`: the coefficient of `xⁱ` is multiplied by `sⁱ`.
    pub fn substitute_scaled(&self, s: &R) -> Self {
        let mut power = R::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &power);
            power = power * s;
        }
        Polynomial::new(out)
    }

    /// `p(x)/x` when the constant term vanishes.
    pub fn divide_by_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(Polynomial::zero()),
            Some(c0) if c0.is_zero() => Some(Polynomial {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => None,
        }
    }

    /// Applies `∑ cₙxⁿ ↦ ∑ cₙ·wₙ·xⁿ⁻¹`, the common shape of the ordinary and
    /// Golden derivatives.
    pub fn weighted_derivative(&self, weight: impl Fn(usize) -> R) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.clone() * &weight(n))
                .collect(),
        )
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Coefficientwise map that may fail.
    pub fn try_map<S: Ring, E>(&self, f: impl Fn(&R) -> Result<S, E>) -> Result<Polynomial<S>, E> {
        Ok(Polynomial::new(
            self.coeffs.iter().map(f).collect::<Result<_, _>>()?,
        ))
    }
}

impl Polynomial<Rational> {
    /// The ordinary formal derivative.
    pub fn derivative(&self) -> Self {
        self.weighted_derivative(|n| Rational::from(n as i64))
    }
}

impl<R: Ring> Default for Polynomial<R> {
    fn default() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'a, R: Ring> AddAssign<&'a Polynomial<R>> for Polynomial<R> {
    fn add_assign(&mut self, rhs: &'a Polynomial<R>) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let coeffs = std::mem::take(&mut self.coeffs);
        *self = Polynomial::new(coeffs);
    }
}

impl<'a, R: Ring> SubAssign<&'a Polynomial<R>> for Polynomial<R> {
    fn sub_assign(&mut self, rhs: &'a Polynomial<R>) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), R::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        let coeffs = std::mem::take(&mut self.coeffs);
        *self = Polynomial::new(coeffs);
    }
}

impl<'a, R: Ring> Mul<&'a Polynomial<R>> for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: &'a Polynomial<R>) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Polynomial::new(out)
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Polynomial::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Only nonzero constants with an invertible value are units.
    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inverse().map(Polynomial::constant),
            _ => None,
        }
    }
}

impl<R: Ring> fmt::Debug for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

/// How [`Polynomial::render`] writes terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// `x^2 - x + 1/2`
    Plain,
    /// `x^{2} - x + \frac{1}{2}`
    Latex,
}

impl Polynomial<Rational> {
    /// Renders with descending powers, e.g. `x^2 - x + 1/2`.
    pub fn render(&self, var: &str, notation: Notation) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.abs();
            let power = match (i, notation) {
                (0, _) => String::new(),
                (1, _) => var.to_string(),
                (_, Notation::Plain) => format!("{var}^{i}"),
                (_, Notation::Latex) => format!("{var}^{{{i}}}"),
            };
            if mag.is_one() && i > 0 {
                out.push_str(&power);
                continue;
            }
            let coef = match notation {
                Notation::Plain => mag.to_string(),
                Notation::Latex if mag.is_integer() => mag.to_string(),
                Notation::Latex => {
                    format!("\\frac{{{}}}{{{}}}", mag.numerator(), mag.denominator())
                }
            };
            out.push_str(&coef);
            if i > 0 {
                if notation == Notation::Plain && !mag.is_integer() {
                    out.push(' ');
                }
                out.push_str(&power);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x", Notation::Plain))
    }
}
