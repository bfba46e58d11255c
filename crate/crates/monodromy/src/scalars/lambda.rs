//! The rational function field `Q(λ)` and Laurent polynomials in `λ`.
//!
//! A [`LambdaFunction`] is a reduced fraction `num/den` of polynomials with
//! monic denominator, so equality is structural. The field carries the bar
//! involution `λ ↦ λ⁻¹` (the "conjugation" appropriate for a formal unit
//! circle variable): on a fraction it is computed by reversing both
//! coefficient lists against a common degree bound, which realizes
//! `x ↦ 1/x` after clearing denominators.
//!
//! Specialization `λ ↦ ζ_q^p` is the ring map into `Q(ζ_q)`; it fails
//! exactly when the denominator vanishes at that root of unity, reported as
//! [`ScalarError::DenominatorVanishes`]. Conjugation commutes with
//! specialization because `ζ̄ = ζ⁻¹`, which is what makes the λ-level
//! computations faithful models of every unit-circle specialization at once.
//!
//! [`Laurent`] is the small companion type for elements that happen to lie
//! in `Z[λ, λ⁻¹]` (numerator over a power of `λ`): it exposes exponent-wise
//! coefficients, bar-invariance testing, and the rewrite of a bar-invariant
//! element as a cosine polynomial `c_0 + 2Σ_{j≥1} c_j cos(jθ)` on `λ = e^{iθ}`.

use std::fmt;

use super::cyclotomic::Cyclotomic;
use super::poly::Poly;
use super::rational::Rational;
use super::{Scalar, ScalarError};

/// A rational function in `λ`, kept in lowest terms with monic denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaFunction {
    num: Poly<Rational>,
    den: Poly<Rational>,
}

impl LambdaFunction {
    /// Builds `num/den`, reducing to lowest terms and normalizing the
    /// denominator to be monic. Panics if `den` is zero.
    pub fn new(num: Poly<Rational>, den: Poly<Rational>) -> Self {
        assert!(!den.is_zero(), "zero denominator in Q(λ)");
        if num.is_zero() {
            return LambdaFunction { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g);
        let den = den.div_exact(&g);
        let lead_inv = den.leading().unwrap().inv().unwrap();
        LambdaFunction { num: num.scale(&lead_inv), den: den.scale(&lead_inv) }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        LambdaFunction::new(p, Poly::one())
    }

    /// The variable `λ` itself.
    pub fn lambda() -> Self {
        LambdaFunction::from_poly(Poly::x())
    }

    pub fn constant(r: Rational) -> Self {
        LambdaFunction::from_poly(Poly::constant(r))
    }

    pub fn num(&self) -> &Poly<Rational> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rational> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_monic() && self.den.degree() == Some(0)
    }

    /// Evaluates at `λ = ζ_q^p`; fails if the denominator vanishes there.
    pub fn specialize(&self, q: u64, p: u64) -> Result<Cyclotomic, ScalarError> {
        let zeta = Cyclotomic::root_of_unity(q, p);
        let embed = |r: &Rational| Cyclotomic::from_rational(r.clone());
        let den = self.den.eval_map(&zeta, embed);
        if Scalar::is_zero(&den) {
            return Err(ScalarError::DenominatorVanishes { q, p: p % q });
        }
        let num = self.num.eval_map(&zeta, embed);
        Ok(num * den.inv().unwrap())
    }

    /// Laurent-polynomial view, available when the denominator is a power
    /// of `λ` (in particular for every element of `Z[λ, λ⁻¹]`).
    pub fn as_laurent(&self) -> Option<Laurent> {
        let d = self.den.degree()?;
        // den must be exactly λ^d (monic monomial).
        for i in 0..d {
            if !self.den.coeff(i).is_zero() {
                return None;
            }
        }
        Some(Laurent::from_parts(-(d as i64), self.num.coeffs().to_vec()))
    }
}

impl std::ops::Add for LambdaFunction {
    type Output = LambdaFunction;
    fn add(self, rhs: LambdaFunction) -> LambdaFunction {
        LambdaFunction::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl std::ops::Sub for LambdaFunction {
    type Output = LambdaFunction;
    fn sub(self, rhs: LambdaFunction) -> LambdaFunction {
        self + (-rhs)
    }
}

impl std::ops::Neg for LambdaFunction {
    type Output = LambdaFunction;
    fn neg(self) -> LambdaFunction {
        LambdaFunction { num: -self.num, den: self.den }
    }
}

impl std::ops::Mul for LambdaFunction {
    type Output = LambdaFunction;
    fn mul(self, rhs: LambdaFunction) -> LambdaFunction {
        LambdaFunction::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Scalar for LambdaFunction {
    fn zero() -> Self {
        LambdaFunction { num: Poly::zero(), den: Poly::one() }
    }

    fn one() -> Self {
        LambdaFunction { num: Poly::one(), den: Poly::one() }
    }

    fn from_i64(n: i64) -> Self {
        LambdaFunction::from_poly(Poly::from_i64(&[n]))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(LambdaFunction::new(self.den.clone(), self.num.clone()))
        }
    }

    /// The bar involution `λ ↦ 1/λ`.
    fn conjugate(&self) -> Self {
        let m = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        LambdaFunction::new(self.num.reversed_to(m), self.den.reversed_to(m))
    }

    fn div_nat(&self, n: u64) -> Self {
        assert!(n != 0, "division by zero natural");
        let inv = Rational::from_i64(n as i64).inv().unwrap();
        LambdaFunction { num: self.num.scale(&inv), den: self.den.clone() }
    }
}

impl fmt::Display for LambdaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num.display_with("λ"))
        } else {
            write!(f, "({})/({})", self.num.display_with("λ"), self.den.display_with("λ"))
        }
    }
}

/// A Laurent polynomial `Σ_j c_j λ^j` with rational coefficients, stored as
/// the lowest exponent plus the ascending coefficient list (both ends
/// trimmed; the zero element has an empty list).
#[derive(Debug, Clone, PartialEq)]
pub struct Laurent {
    min_exp: i64,
    coeffs: Vec<Rational>,
}

impl Laurent {
    pub fn from_parts(mut min_exp: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| Scalar::is_zero(c)) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| Scalar::is_zero(*c)).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            min_exp += lead_zeros as i64;
        }
        if coeffs.is_empty() {
            min_exp = 0;
        }
        Laurent { min_exp, coeffs }
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_i64(min_exp: i64, coeffs: &[i64]) -> Self {
        Laurent::from_parts(min_exp, coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `λ^e`.
    pub fn coeff(&self, e: i64) -> Rational {
        if e < self.min_exp {
            return Rational::from_i64(0);
        }
        self.coeffs
            .get((e - self.min_exp) as usize)
            .cloned()
            .unwrap_or_else(|| Rational::from_i64(0))
    }

    /// Whether the element is fixed by `λ ↦ λ⁻¹`, i.e. `c_e = c_{−e}`.
    pub fn is_bar_invariant(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if self.min_exp != -self.max_exp() {
            return false;
        }
        (0..=self.max_exp()).all(|e| self.coeff(e) == self.coeff(-e))
    }

    /// For a bar-invariant element, the coefficients `c_0, …, c_d` such that
    /// the value at `λ = e^{iθ}` is `c_0 + 2Σ_{j=1}^{d} c_j cos(jθ)`.
    pub fn cosine_coefficients(&self) -> Option<Vec<Rational>> {
        if !self.is_bar_invariant() {
            return None;
        }
        Some((0..=self.max_exp().max(0)).map(|e| self.coeff(e)).collect())
    }

    /// Exact evaluation at `λ = ζ_q^p`.
    pub fn eval_root_of_unity(&self, q: u64, p: u64) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(c) {
                continue;
            }
            let e = self.min_exp + j as i64;
            let pe = (e * p as i64).rem_euclid(q as i64) as u64;
            acc = acc + Cyclotomic::from_rational(c.clone()) * Cyclotomic::root_of_unity(q, pe);
        }
        acc
    }

    /// Exact evaluation at a nonzero rational `λ`.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        assert!(!Scalar::is_zero(x), "Laurent evaluation at zero");
        let mut acc = Rational::from_i64(0);
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.min_exp + j as i64;
            acc = acc + c.clone() * x.pow_i(e).unwrap();
        }
        acc
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for j in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[j];
            if Scalar::is_zero(c) {
                continue;
            }
            let e = self.min_exp + j as i64;
            let cs = c.to_string();
            let (sign, mag) = if let Some(m) = cs.strip_prefix('-') {
                ("-", m.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag == "1" => write!(f, "λ")?,
                1 => write!(f, "{mag}λ")?,
                _ if mag == "1" => write!(f, "λ^{e}")?,
                _ => write!(f, "{mag}λ^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    fn one_over_one_minus_lambda() -> LambdaFunction {
        let one = LambdaFunction::one();
        (one.clone() - LambdaFunction::lambda()).inv().unwrap()
    }

    #[test]
    fn canonical_form_makes_equality_structural() {
        // (λ² − 1)/(λ + 1) reduces to λ − 1.
        let a = LambdaFunction::new(Poly::from_i64(&[-1, 0, 1]), Poly::from_i64(&[1, 1]));
        let b = LambdaFunction::from_poly(Poly::from_i64(&[-1, 1]));
        assert_eq!(a, b);
        // 2λ/2 normalizes the denominator to monic.
        let c = LambdaFunction::new(Poly::from_i64(&[0, 2]), Poly::from_i64(&[2]));
        assert_eq!(c, LambdaFunction::lambda());
    }

    #[test]
    fn field_operations() {
        let f = one_over_one_minus_lambda();
        let g = LambdaFunction::lambda();
        let sum = f.clone() + g.clone();
        // 1/(1−λ) + λ = (1 + λ − λ²)/(1 − λ); denominator normalized monic
        // gives (−1 − λ + λ²)/(λ − 1).
        let expected =
            LambdaFunction::new(Poly::from_i64(&[-1, -1, 1]), Poly::from_i64(&[-1, 1]));
        assert_eq!(sum, expected);
        assert!((f.clone() * f.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation_matches_reference_example() {
        // conj(1/(1−λ)) = −λ/(1−λ) = λ/(λ−1).
        let f = one_over_one_minus_lambda();
        let expected = LambdaFunction::new(Poly::from_i64(&[0, -1]), Poly::from_i64(&[1, -1]));
        assert_eq!(f.conjugate(), expected);
        // Involution.
        assert_eq!(f.conjugate().conjugate(), f);
        // λ ↦ λ⁻¹ on the variable itself.
        let lam = LambdaFunction::lambda();
        assert_eq!(lam.conjugate() * lam.clone(), LambdaFunction::one());
    }

    #[test]
    fn specialization_is_a_homomorphism_and_respects_conjugation() {
        let f = one_over_one_minus_lambda();
        let g = LambdaFunction::lambda() + LambdaFunction::from_i64(2);
        let (q, p) = (12, 5);
        let fv = f.specialize(q, p).unwrap();
        let gv = g.specialize(q, p).unwrap();
        assert_eq!((f.clone() * g.clone()).specialize(q, p).unwrap(), fv.clone() * gv.clone());
        assert_eq!((f.clone() + g).specialize(q, p).unwrap(), fv.clone() + gv);
        assert_eq!(f.conjugate().specialize(q, p).unwrap(), fv.conjugate());
    }

    #[test]
    fn specialization_reference_value() {
        // 1/(1−λ) at λ = ζ₄ = i is (1 + i)/2.
        let f = one_over_one_minus_lambda();
        let v = f.specialize(4, 1).unwrap();
        let expected =
            (Cyclotomic::one() + Cyclotomic::root_of_unity(4, 1)).div_nat(2);
        assert_eq!(v, expected);
    }

    #[test]
    fn specialization_detects_vanishing_denominator() {
        let f = one_over_one_minus_lambda();
        assert_eq!(f.specialize(5, 0), Err(ScalarError::DenominatorVanishes { q: 5, p: 0 }));
        assert_eq!(f.specialize(1, 1), Err(ScalarError::DenominatorVanishes { q: 1, p: 0 }));
    }

    #[test]
    fn laurent_view_and_bar_invariance() {
        // (λ² + 3λ + 1)/λ = λ + 3 + λ⁻¹, bar-invariant.
        let f = LambdaFunction::new(Poly::from_i64(&[1, 3, 1]), Poly::from_i64(&[0, 1]));
        let l = f.as_laurent().unwrap();
        assert_eq!(l.min_exp(), -1);
        assert_eq!(l.max_exp(), 1);
        assert!(l.is_bar_invariant());
        assert_eq!(l.cosine_coefficients().unwrap(), vec![rat(3, 1), rat(1, 1)]);
        // A non-monomial denominator has no Laurent view.
        assert!(one_over_one_minus_lambda().as_laurent().is_none());
        // Asymmetric element is not bar-invariant.
        let g = LambdaFunction::from_poly(Poly::from_i64(&[1, 1])).as_laurent().unwrap();
        assert!(!g.is_bar_invariant());
    }

    #[test]
    fn laurent_evaluations_agree() {
        let l = Laurent::from_i64(-2, &[1, 0, -3, 0, 1]); // λ⁻² − 3 + λ²
        // At λ = ζ₈: ζ₈² = i, ζ₈⁻² = −i, so the value is −3.
        assert_eq!(l.eval_root_of_unity(8, 1), Cyclotomic::from_i64(-3));
        // At λ = 2: 1/4 − 3 + 4 = 5/4.
        assert_eq!(l.eval_rational(&rat(2, 1)), rat(5, 4));
        // cos form: c₀ = −3, c₁ = 0, c₂ = 1 → at θ = π/2: −3 + 2·cos(π) = −5.
        assert_eq!(l.cosine_coefficients().unwrap(), vec![rat(-3, 1), rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn laurent_display() {
        let l = Laurent::from_i64(-1, &[-1, 2, 1]);
        assert_eq!(l.to_string(), "λ + 2 - λ^-1");
    }
}
