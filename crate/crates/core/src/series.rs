//! Truncated formal power series `c₀ + c₁z + … + c_N z^N (mod z^{N+1})`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A power series in `z` known to order `N`, i.e. exactly `N + 1`
/// coefficients.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or truncates so exactly `order + 1` coefficients remain.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::new(order, vec![R::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries::new(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| self.coeffs[n].clone() + other.coeffs[n].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| self.coeffs[n].clone() - other.coeffs[n].clone())
    }

    /// Cauchy product modulo `z^{N+1}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries::from_fn(order, |n| {
            let mut acc = R::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &(self.coeffs[k].clone() * &other.coeffs[n - k]);
            }
            acc
        })
    }

    /// Multiplicative inverse by the convolution recurrence
    /// `c′₀ = 1/c₀`, `c′ₙ = −(1/c₀) ∑_{k=1..n} c_k c′_{n−k}`.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertibleConstant)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = R::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &(self.coeffs[k].clone() * &out[n - k]);
            }
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Same result as [`inverse`](Self::inverse), by Newton doubling
    /// `g ← g(2 − fg)`.
    pub fn inverse_newton(&self) -> Result<Self> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertibleConstant)?;
        let target = self.order();
        let mut g = TruncatedSeries::new(0, vec![inv0]);
        let mut prec = 0;
        while prec < target {
            prec = (2 * prec + 1).min(target);
            let g_ext = g.truncate(prec);
            let fg = self.truncate(prec).mul(&g_ext);
            let two_minus = TruncatedSeries::from_fn(prec, |n| {
                let c = -fg.coeffs[n].clone();
                if n == 0 {
                    c + R::one() + R::one()
                } else {
                    c
                }
            });
            g = g_ext.mul(&two_minus);
        }
        Ok(g)
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O(z^{}) ", self.order() + 1)?;
        f.debug_list().entries(&self.coeffs).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn ints(order: usize, v: &[i64]) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(order, v.iter().map(|&n| Rational::from(n)).collect())
    }

    fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<Rational>> {
        proptest::collection::vec((-30i64..30, 1i64..10), order + 1).prop_map(move |v| {
            TruncatedSeries::new(
                order,
                v.into_iter()
                    .map(|(n, d)| Rational::new(n, d).unwrap())
                    .collect(),
            )
        })
    }

    #[test]
    fn inverse_of_one() {
        let one = TruncatedSeries::<Rational>::one(5);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn geometric_series() {
        let s = ints(3, &[1, 1]);
        assert_eq!(s.inverse().unwrap(), ints(3, &[1, -1, 1, -1]));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let s = ints(3, &[0, 1]);
        assert_eq!(s.inverse().unwrap_err(), Error::NonInvertibleConstant);
        assert_eq!(
            s.inverse_newton().unwrap_err(),
            Error::NonInvertibleConstant
        );
    }

    #[test]
    fn new_pads_to_order() {
        let s = ints(4, &[2]);
        assert_eq!(s.coeffs().len(), 5);
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = ints(5, &[1, 2, 3, 4, 5, 6]);
        let b = ints(2, &[1, 1, 1]);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.mul(&b), ints(2, &[1, 3, 6]));
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(mut a in series(12)) {
            if a.coeffs[0].is_zero() {
                a.coeffs[0] = Rational::from(1);
            }
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.mul(&inv), TruncatedSeries::one(12));
            prop_assert_eq!(inv.mul(&a), TruncatedSeries::one(12));
        }

        #[test]
        fn newton_matches_naive(mut a in series(17)) {
            if a.coeffs[0].is_zero() {
                a.coeffs[0] = Rational::from(-3);
            }
            prop_assert_eq!(a.inverse_newton().unwrap(), a.inverse().unwrap());
        }

        #[test]
        fn mul_commutative_associative(a in series(6), b in series(6), c in series(6)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
