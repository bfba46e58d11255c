//! Arbitrary-precision rationals.
//!
//! `Q` is backed by [`num_rational::BigRational`]; this module only adds the
//! [`Scalar`] impl (conjugation is the identity) and a couple of construction
//! helpers used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Scalar;

/// The field of rational numbers, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational (`d != 0`).
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        rat_int(n)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn div_nat(&self, n: u64) -> Self {
        assert!(n != 0, "division by zero natural");
        self / Rational::from_integer(BigInt::from(n))
    }
}

/// Sign of a rational: `-1`, `0`, or `1`.
pub fn sign(r: &Rational) -> i32 {
    if Zero::is_zero(r) {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_impl_basics() {
        let a = rat(3, 4);
        let b = rat(1, 6);
        assert_eq!(a.clone() + b.clone(), rat(11, 12));
        assert_eq!(a.clone() * b, rat(1, 8));
        assert_eq!(a.inv().unwrap(), rat(4, 3));
        assert_eq!(<Rational as Scalar>::zero().inv(), None);
        assert_eq!(a.conjugate(), a);
        assert_eq!(rat(5, 2).div_nat(5), rat(1, 2));
    }

    #[test]
    fn sign_covers_all_cases() {
        assert_eq!(sign(&rat(-2, 7)), -1);
        assert_eq!(sign(&rat_int(0)), 0);
        assert_eq!(sign(&rat(9, 5)), 1);
    }
}
