//! Exact scalar domains and the common interface they share.
//!
//! Four domains are implemented:
//!
//! * [`rational::Rational`] — arbitrary-precision rationals `Q` (the base
//!   field everything else is built from),
//! * [`lambda::LambdaFunction`] — the rational function field `Q(λ)` carrying
//!   the bar involution `λ ↦ λ⁻¹`,
//! * [`cyclotomic::Cyclotomic`] — cyclotomic fields `Q(ζ_q)` with elements
//!   reduced modulo the `q`-th cyclotomic polynomial,
//! * [`dyadic`] — outward-rounded dyadic intervals, used only where a
//!   rigorous real enclosure of a cyclotomic number is required.
//!
//! The first three are fields with a distinguished conjugation and implement
//! the [`Scalar`] trait, so the matrix and lattice layers are generic over
//! them. Conjugation is the identity on `Q`, the substitution `λ ↦ λ⁻¹` on
//! `Q(λ)`, and complex conjugation `ζ_q ↦ ζ_q⁻¹` on `Q(ζ_q)`; specialization
//! `λ ↦ ζ_q^p` intertwines the three.

pub mod cyclotomic;
pub mod dyadic;
pub mod lambda;
pub mod poly;
pub mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Errors from scalar-domain arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// A rational function was evaluated at a point where its denominator
    /// vanishes (e.g. specializing `1/(1-λ)` at `λ = 1`).
    #[error("denominator vanishes at λ = ζ_{q}^{p}")]
    DenominatorVanishes { q: u64, p: u64 },
}

/// An exact field with a conjugation involution.
///
/// The trait deliberately stays small: by-value ring operations via the
/// standard operator traits, plus the handful of extras (inverse, conjugate,
/// exact division by a small natural number) that the linear algebra needs.
/// Matrices here are tiny — at most rank `2(k-1)` for small `k` — so the
/// by-value, clone-on-use style costs nothing compared to the bignum
/// arithmetic itself.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// The conjugation involution of the domain.
    fn conjugate(&self) -> Self;

    /// Exact division by a positive integer (always legal in a field of
    /// characteristic zero; `n` must be nonzero).
    fn div_nat(&self, n: u64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Nonnegative integer power by repeated squaring.
    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power; negative exponents require invertibility.
    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u(e as u64))
        } else {
            self.inv().map(|r| r.pow_u(e.unsigned_abs()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::rational::Rational;
    use super::Scalar;

    #[test]
    fn pow_u_matches_repeated_multiplication() {
        let x = Rational::new(3.into(), 7.into());
        let mut acc = Rational::from_i64(1);
        for e in 0..10u64 {
            assert_eq!(x.pow_u(e), acc);
            acc = acc * x.clone();
        }
    }

    #[test]
    fn pow_i_negative_inverts() {
        let x = Rational::new(2.into(), 5.into());
        let y = x.pow_i(-3).unwrap();
        assert_eq!(y, Rational::new(125.into(), 8.into()));
        assert_eq!(Rational::zero().pow_i(-1), None);
    }
}
