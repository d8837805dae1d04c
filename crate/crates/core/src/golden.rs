//! The quadratic field Q(√5), home of the golden ratio and its conjugate.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::Ring;

/// An element `a + b√5` of Q(√5) with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    a: Rational,
    b: Rational,
}

impl GoldenNumber {
    pub fn new(rational: Rational, sqrt5: Rational) -> Self {
        GoldenNumber {
            a: rational,
            b: sqrt5,
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        GoldenNumber::new(r, Rational::zero())
    }

    /// φ = (1 + √5)/2.
    pub fn phi() -> Self {
        let half = Rational::new(1, 2).unwrap();
        GoldenNumber::new(half.clone(), half)
    }

    /// φ′ = (1 − √5)/2 = −1/φ.
    pub fn phi_conjugate() -> Self {
        let half = Rational::new(1, 2).unwrap();
        GoldenNumber::new(half.clone(), -half)
    }

    pub fn sqrt5() -> Self {
        GoldenNumber::new(Rational::zero(), Rational::one())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    /// Galois conjugate `a − b√5`.
    pub fn conjugate(&self) -> Self {
        GoldenNumber::new(self.a.clone(), -&self.b)
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from(5) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conjugate();
        Some(GoldenNumber::new(&c.a * &n, &c.b * &n))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Coerces to a rational, failing if a √5 component survives.
    pub fn to_rational(&self, context: &str) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.a.clone())
        } else {
            Err(Error::IrrationalResidue {
                context: context.to_string(),
                value: self.to_string(),
            })
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GoldenNumber::new(&self.a * r, &self.b * r)
    }
}

impl From<Rational> for GoldenNumber {
    fn from(r: Rational) -> Self {
        GoldenNumber::from_rational(r)
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}*sqrt(5)", self.b.abs())
        } else {
            write!(f, "{}*sqrt(5)", self.b)
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<'a> Mul<&'a GoldenNumber> for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &'a GoldenNumber) -> GoldenNumber {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = Rational::from(5);
        let a = &self.a * &rhs.a + five * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        GoldenNumber::new(a, b)
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: GoldenNumber) -> GoldenNumber {
        self * &rhs
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.a, -self.b)
    }
}

impl<'a> AddAssign<&'a GoldenNumber> for GoldenNumber {
    fn add_assign(&mut self, rhs: &'a GoldenNumber) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> SubAssign<&'a GoldenNumber> for GoldenNumber {
    fn sub_assign(&mut self, rhs: &'a GoldenNumber) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Ring for GoldenNumber {
    fn zero() -> Self {
        GoldenNumber::default()
    }

    fn one() -> Self {
        GoldenNumber::from_rational(Rational::one())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn golden() -> impl Strategy<Value = GoldenNumber> {
        (rational(), rational()).prop_map(|(a, b)| GoldenNumber::new(a, b))
    }

    #[test]
    fn phi_and_conjugate_are_roots() {
        let phi = GoldenNumber::phi();
        let psi = GoldenNumber::phi_conjugate();
        assert_eq!(phi.clone() + psi.clone(), GoldenNumber::one());
        assert_eq!(phi.clone() * &psi, -GoldenNumber::one());
        // x² = x + 1
        assert_eq!(phi.pow(2), phi.clone() + GoldenNumber::one());
        assert_eq!(psi.pow(2), psi.clone() + GoldenNumber::one());
        assert_eq!(phi.inverse().unwrap(), -psi);
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = GoldenNumber::sqrt5();
        assert_eq!(s.clone() * &s, GoldenNumber::from(Rational::from(5)));
        assert_eq!(
            GoldenNumber::phi() + GoldenNumber::phi().inverse().unwrap(),
            s
        );
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(GoldenNumber::zero().inverse().is_none());
    }

    #[test]
    fn residue_is_reported() {
        let err = GoldenNumber::phi().to_rational("test").unwrap_err();
        assert!(matches!(err, Error::IrrationalResidue { .. }));
    }

    proptest! {
        #[test]
        fn mul_associative(x in golden(), y in golden(), z in golden()) {
            prop_assert_eq!((x.clone() * &y) * &z, x * &(y * &z));
        }

        #[test]
        fn mul_commutative(x in golden(), y in golden()) {
            prop_assert_eq!(x.clone() * &y, y * &x);
        }

        #[test]
        fn distributive(x in golden(), y in golden(), z in golden()) {
            let lhs = x.clone() * &(y.clone() + z.clone());
            let rhs = x.clone() * &y + x * &z;
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_is_two_sided(x in golden()) {
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(x.clone() * &inv, GoldenNumber::one());
            prop_assert_eq!(inv * &x, GoldenNumber::one());
        }

        #[test]
        fn norm_is_multiplicative(x in golden(), y in golden()) {
            prop_assert_eq!((x.clone() * &y).norm(), x.norm() * y.norm());
        }
    }
}
