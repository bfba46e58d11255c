//! Dense univariate polynomials over any [`Scalar`] field.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so the zero polynomial is the empty vector and `degree` is
//! `coeffs.len() - 1` otherwise. Division is Euclidean (the divisor's leading
//! coefficient must be invertible, which in a field means nonzero), and gcds
//! are returned monic so they are canonical.

use std::fmt;

use super::Scalar;

/// A polynomial `c_0 + c_1 x + … + c_d x^d` over the field `F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F: Scalar> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![F::zero(), F::one()])
    }

    /// The monomial `c·x^n`.
    pub fn monomial(c: F, n: usize) -> Self {
        let mut coeffs = vec![F::zero(); n];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// Convenience constructor from small integers, ascending by degree.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<F> {
        self.coeffs.last().cloned()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Evaluation into another scalar domain through a coefficient embedding.
    pub fn eval_map<G: Scalar>(&self, x: &G, embed: impl Fn(&F) -> G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + embed(c);
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Writes the coefficient of `x^i` into slot `m - i`; this realizes the
    /// substitution `x ↦ 1/x` followed by clearing denominators with `x^m`.
    /// Requires `m ≥ deg`.
    pub fn reversed_to(&self, m: usize) -> Self {
        let d = self.degree().unwrap_or(0);
        assert!(m >= d, "reversal bound below degree");
        let mut coeffs = vec![F::zero(); m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[m - i] = c.clone();
        }
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    /// `None` if `div` is zero.
    pub fn divrem(&self, div: &Self) -> Option<(Self, Self)> {
        let dd = div.degree()?;
        let lead_inv = div.leading().unwrap().inv().expect("field leading coeff");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = rem[k].clone() * lead_inv.clone();
            if !factor.is_zero() {
                quot[k - dd] = factor.clone();
                for (j, dc) in div.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    rem[idx] = rem[idx].clone() - factor.clone() * dc.clone();
                }
            }
            rem.pop();
        }
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact division; panics if the remainder is nonzero or `div` is zero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div).expect("division by zero polynomial");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Whether `div` divides `self` exactly.
    pub fn divisible_by(&self, div: &Self) -> bool {
        match self.divrem(div) {
            Some((_, r)) => r.is_zero(),
            None => false,
        }
    }

    /// Scales to make the leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coeff")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Renders with the given variable symbol, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let term = if i == 0 {
                cs
            } else {
                let pow = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if c.is_one() {
                    pow
                } else if cs == "-1" {
                    format!("-{pow}")
                } else if cs.contains(['+', '-', '/']) && !cs.starts_with('-') {
                    format!("({cs})*{pow}")
                } else {
                    format!("{cs}*{pow}")
                }
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (j, term) in parts.iter().enumerate() {
            if j == 0 {
                out.push_str(term);
            } else if let Some(stripped) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        out
    }
}

impl<F: Scalar> std::ops::Add for Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Scalar> std::ops::Sub for Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Scalar> std::ops::Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<F: Scalar> std::ops::Mul for Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::Rational;

    type P = Poly<Rational>;

    #[test]
    fn trims_trailing_zeros() {
        let p = P::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(P::from_i64(&[0, 0]).is_zero());
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_eval_agree() {
        let p = P::from_i64(&[1, -3, 2]); // (2x - 1)(x - 1)
        let q = P::from_i64(&[-1, 2]);
        let r = P::from_i64(&[-1, 1]);
        assert_eq!(q.clone() * r.clone(), p);
        let x = Rational::from_i64(5);
        assert_eq!(p.eval(&x), q.eval(&x) * r.eval(&x));
        assert_eq!((p.clone() + q.clone()).eval(&x), p.eval(&x) + q.eval(&x));
    }

    #[test]
    fn divrem_recovers_factors() {
        let p = P::from_i64(&[6, 5, -2, 1]);
        let d = P::from_i64(&[3, 1]);
        let (q, r) = p.divrem(&d).unwrap();
        assert_eq!(q.clone() * d + r, p);
    }

    #[test]
    fn div_exact_and_divisibility() {
        let a = P::from_i64(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let b = P::from_i64(&[1, 0, 1]); // x^2 + 1
        assert!(a.divisible_by(&b));
        assert_eq!(a.div_exact(&b), P::from_i64(&[-1, 0, 1]));
        assert!(!a.divisible_by(&P::from_i64(&[1, 1, 1])));
    }

    #[test]
    fn gcd_is_monic_common_factor() {
        let a = P::from_i64(&[-1, 0, 1]) * P::from_i64(&[2, 2]); // (x²-1)·2(x+1)
        let b = P::from_i64(&[1, 1]) * P::from_i64(&[3, 6, 3]); // (x+1)·3(x+1)²
        let g = a.gcd(&b);
        assert_eq!(g, P::from_i64(&[1, 2, 1])); // (x+1)², monic
    }

    #[test]
    fn reversal_realizes_inversion() {
        // p(x) = 2 + 3x + x³; x³·p(1/x) = 2x³ + 3x² + 1.
        let p = P::from_i64(&[2, 3, 0, 1]);
        assert_eq!(p.reversed_to(3), P::from_i64(&[1, 0, 3, 2]));
    }

    #[test]
    fn display_is_readable() {
        let p = P::from_i64(&[-2, 0, 1]);
        assert_eq!(p.to_string(), "x^2 - 2");
        assert_eq!(P::from_i64(&[1, -1]).display_with("t"), "-t + 1");
    }
}
