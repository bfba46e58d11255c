//! Deciding whether a specialized matrix has finite or infinite order.
//!
//! A matrix over `Q(ζ_q)` has finite order iff its minimal polynomial over
//! `Q` is squarefree and every irreducible factor is a cyclotomic polynomial.
//! [`decide_order`] implements that test exactly:
//!
//! 1. restrict scalars to `Q` — replace each entry by its `φ(q)×φ(q)`
//!    multiplication matrix in the power basis of `Q(ζ_q)`,
//! 2. compute the minimal polynomial `m` of the rational matrix by Krylov
//!    iteration,
//! 3. for each candidate `n` with `φ(n) ≤ deg m` (hence `n ≤ 2·(deg m)²`,
//!    since `φ(n) ≥ √(n/2)`), divide `Φ_n` out of `m` **once**; a repeated
//!    factor, or any non-cyclotomic factor, survives as a leftover `≠ 1` and
//!    witnesses infinite order (a Jordan block or an eigenvalue that is not a
//!    root of unity),
//! 4. otherwise `N = lcm` of the detected `n`; confirm `M^N = 1` on the
//!    original cyclotomic matrix and scan the divisors of `N` in increasing
//!    order for the minimal exponent.
//!
//! Every decision leaves a [`CertStep`] in the certificate trail, so a
//! verdict can be audited without rerunning the computation.
//!
//! For the element `W` there is also a [`fast_path`] that needs only the
//! value `P(λ)`: the non-unit eigenvalues of `W` are the roots of
//! `x² + P·x + 1`, a pair `μ, μ⁻¹`. If both lay on the unit circle then
//! `μ⁻¹ = μ̄` and `P = −(μ + μ̄)` would be real with `|P| ≤ 2`; so `P ∉ R`
//! or `P < −2` or `P > 2` each force an eigenvalue of modulus `> 1` and
//! hence infinite order. The wedge of specializations relevant to plane
//! curves always lands in the `P < −2` branch.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::matrix::Matrix;
use crate::scalars::cyclotomic::{cyclotomic_poly, divisors, euler_phi, Cyclotomic};
use crate::scalars::poly::Poly;
use crate::scalars::rational::Rational;
use crate::scalars::Scalar;

/// The outcome of an order decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The matrix has the stated (minimal) finite order.
    Finite(u64),
    /// No power of the matrix is the identity.
    Infinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Finite(n) => write!(f, "finite (order {n})"),
            Verdict::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Finite(n) => s.serialize_str(&format!("finite({n})")),
            Verdict::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// One audited step of an order decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertStep {
    pub test: String,
    pub outcome: String,
}

impl CertStep {
    fn new(test: impl Into<String>, outcome: impl Into<String>) -> Self {
        CertStep { test: test.into(), outcome: outcome.into() }
    }
}

/// A verdict together with the trail of tests that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct OrderResult {
    pub verdict: Verdict,
    pub certificate: Vec<CertStep>,
}

impl OrderResult {
    /// The trail as one human-readable line per step.
    pub fn trail_summary(&self) -> String {
        self.certificate
            .iter()
            .map(|s| format!("{}: {}", s.test, s.outcome))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Views a matrix over `Q(ζ_q)` as a rational matrix of size `n·φ(q)`,
/// replacing each entry by its multiplication matrix in the power basis
/// `1, ζ, …, ζ^{φ(q)−1}`. Returns the rational matrix and the common order
/// `q` (the maximum entry order; rational entries are lifted).
pub fn restrict_scalars(m: &Matrix<Cyclotomic>) -> (Matrix<Rational>, u64) {
    let n = m.rows();
    assert_eq!(n, m.cols(), "scalar restriction expects a square matrix");
    let q = (0..n)
        .flat_map(|r| (0..n).map(move |c| m.get(r, c).order()))
        .max()
        .unwrap_or(1);
    let phi = euler_phi(q) as usize;
    let one_q = Cyclotomic::root_of_unity(q, 0);
    let mut big: Matrix<Rational> = Matrix::zeros(n * phi, n * phi);
    for r in 0..n {
        for c in 0..n {
            let entry = m.get(r, c).clone() * one_q.clone();
            if entry.is_zero() {
                continue;
            }
            for j in 0..phi {
                let prod = entry.clone() * Cyclotomic::root_of_unity(q, j as u64);
                for (i, coeff) in prod.coeffs().iter().enumerate() {
                    if !Scalar::is_zero(coeff) {
                        big.set(r * phi + i, c * phi + j, coeff.clone());
                    }
                }
            }
        }
    }
    (big, q)
}

fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `m(a)·v` by vector Horner — `deg m` mat-vec products, no matrix powers.
fn poly_apply(m: &Poly<Rational>, a: &Matrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    let deg = match m.degree() {
        Some(d) => d,
        None => return vec![Rational::from_i64(0); v.len()],
    };
    let mut acc = vec![Rational::from_i64(0); v.len()];
    for k in (0..=deg).rev() {
        acc = a.mul_vec(&acc);
        let c = m.coeff(k);
        if !Scalar::is_zero(&c) {
            for (slot, x) in acc.iter_mut().zip(v.iter()) {
                *slot = slot.clone() + c.clone() * x.clone();
            }
        }
    }
    acc
}

/// The minimal polynomial of a square rational matrix, monic.
///
/// Krylov iteration with echelon bookkeeping: for each basis vector `e_i`
/// the chain `e_i, A·e_i, A²·e_i, …` is reduced against an echelon basis
/// while the reducing polynomial combination is carried along; the first
/// chain vector that reduces to zero yields the local minimal polynomial of
/// `e_i`, and the global minimal polynomial is the lcm of the locals. Before
/// each chain the current lcm is applied to `e_i` (vector Horner) and the
/// chain is skipped when it already annihilates.
pub fn minimal_polynomial(a: &Matrix<Rational>) -> Poly<Rational> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "minimal polynomial expects a square matrix");
    let mut m = Poly::<Rational>::one();
    for i in 0..n {
        let mut e = vec![Rational::from_i64(0); n];
        e[i] = Rational::from_i64(1);
        if m.degree().map_or(false, |d| d >= 1) && vec_is_zero(&poly_apply(&m, a, &e)) {
            continue;
        }
        // Echelon rows: (pivot index, vector with 1 at the pivot, combination
        // polynomial p with row = p(A)·e_i).
        let mut rows: Vec<(usize, Vec<Rational>, Poly<Rational>)> = Vec::new();
        let mut v = e;
        let mut p = Poly::<Rational>::one();
        let local = loop {
            for (piv, row_v, row_p) in &rows {
                let f = v[*piv].clone();
                if Scalar::is_zero(&f) {
                    continue;
                }
                for (slot, x) in v.iter_mut().zip(row_v.iter()) {
                    *slot = slot.clone() - f.clone() * x.clone();
                }
                p = p - row_p.scale(&f);
            }
            match v.iter().position(|x| !Scalar::is_zero(x)) {
                None => break p.monic(),
                Some(piv) => {
                    let f = v[piv].inv().expect("pivot is nonzero");
                    let row_v: Vec<Rational> =
                        v.iter().map(|x| x.clone() * f.clone()).collect();
                    let row_p = p.scale(&f);
                    v = a.mul_vec(&row_v);
                    p = row_p.clone() * Poly::x();
                    rows.push((piv, row_v, row_p));
                }
            }
        };
        let g = m.gcd(&local);
        m = (m * local).div_exact(&g).monic();
    }
    m
}

/// Exact order decision for a square matrix over a cyclotomic field.
pub fn decide_order(m: &Matrix<Cyclotomic>) -> OrderResult {
    let mut trail = Vec::new();
    let (big, q) = restrict_scalars(m);
    trail.push(CertStep::new(
        "restrict scalars to Q",
        format!("entries lie in Q(ζ_{q}); rational matrix of size {}", big.rows()),
    ));

    let min = minimal_polynomial(&big);
    let d = min.degree().expect("minimal polynomial of a nonempty matrix is nonconstant") as u64;
    trail.push(CertStep::new(
        "minimal polynomial over Q",
        format!("degree {d}: {min}"),
    ));

    let mut leftover = min;
    let mut detected: Vec<u64> = Vec::new();
    for n in 1..=(2 * d * d).max(1) {
        if euler_phi(n) > d {
            continue;
        }
        if leftover.degree() == Some(0) {
            break;
        }
        let phi_n = cyclotomic_poly(n);
        if leftover.gcd(&phi_n).degree() == Some(0) {
            continue;
        }
        // Φ_n is irreducible over Q, so a nontrivial gcd means Φ_n | leftover.
        leftover = leftover.div_exact(&phi_n).monic();
        detected.push(n);
    }

    if leftover.degree() != Some(0) {
        trail.push(CertStep::new(
            "cyclotomic factorization",
            format!(
                "after dividing Φ_n once for n ∈ {detected:?}, leftover {leftover} ≠ 1 — \
                 a repeated root-of-unity eigenvalue (Jordan block) or an eigenvalue that \
                 is not a root of unity"
            ),
        ));
        return OrderResult { verdict: Verdict::Infinite, certificate: trail };
    }

    let n_big: u64 = detected.iter().fold(1u64, |acc, &n| num_integer::lcm(acc, n));
    trail.push(CertStep::new(
        "cyclotomic factorization",
        format!("minimal polynomial = Π Φ_n over n ∈ {detected:?}, squarefree; candidate order N = {n_big}"),
    ));

    assert!(
        m.pow(n_big).is_identity(),
        "a squarefree product of cyclotomics must force M^N = 1"
    );
    trail.push(CertStep::new(
        "power check",
        format!("M^{n_big} = 1 confirmed on the cyclotomic matrix"),
    ));

    let mut divs = divisors(n_big);
    divs.sort_unstable();
    let order = divs
        .into_iter()
        .find(|&e| m.pow(e).is_identity())
        .expect("N itself satisfies M^N = 1");
    trail.push(CertStep::new(
        "minimal order scan",
        format!("smallest divisor e of {n_big} with M^e = 1 is {order}"),
    ));
    OrderResult { verdict: Verdict::Finite(order), certificate: trail }
}

/// Order decision for `W` from the value `P(λ)` alone; `None` means the fast
/// criteria are silent and the complete test must run.
pub fn fast_path(p_value: &Cyclotomic) -> (Option<Verdict>, Vec<CertStep>) {
    let mut trail = Vec::new();
    if !p_value.is_real() {
        trail.push(CertStep::new(
            "fast path: is P real?",
            "P ∉ R — a unit-circle root pair μ, μ̄ of x² + Px + 1 would force P = −(μ+μ̄) ∈ R, \
             so some eigenvalue has modulus ≠ 1",
        ));
        return (Some(Verdict::Infinite), trail);
    }
    if (p_value.clone() + Cyclotomic::from_i64(2)).sign_of_real() < 0 {
        trail.push(CertStep::new(
            "fast path: sign of P + 2",
            "P < −2 — the quadratic factor has real roots μ < −1 < μ⁻¹, an eigenvalue of \
             modulus > 1",
        ));
        return (Some(Verdict::Infinite), trail);
    }
    if (p_value.clone() - Cyclotomic::from_i64(2)).sign_of_real() > 0 {
        trail.push(CertStep::new(
            "fast path: sign of P − 2",
            "P > 2 — the quadratic factor has real roots μ⁻¹ < 1 < μ, an eigenvalue of \
             modulus > 1",
        ));
        return (Some(Verdict::Infinite), trail);
    }
    trail.push(CertStep::new(
        "fast path: sign of P ± 2",
        "P real with −2 ≤ P ≤ 2 — fast path inconclusive, running the complete test",
    ));
    (None, trail)
}

/// [`fast_path`] on `P(λ)` first, complete [`decide_order`] on `W` when the
/// fast criteria are silent; the trails are concatenated.
pub fn decide_order_wajnryb(w: &Matrix<Cyclotomic>, p_value: &Cyclotomic) -> OrderResult {
    let (fast, mut trail) = fast_path(p_value);
    if let Some(verdict) = fast {
        return OrderResult { verdict, certificate: trail };
    }
    let full = decide_order(w);
    trail.extend(full.certificate);
    OrderResult { verdict: full.verdict, certificate: trail }
}

/// One admissible rotation number `p/d` of a degree-`d` plane curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdmissibleFraction {
    /// Numerator `p` with `1/4 ≤ p/d ≤ 2/5`.
    pub p: u64,
    /// The order `k = d / gcd(p, d)` of the specialization `λ = e^{2πip/d}`.
    pub k: u64,
    /// Whether `k ≥ 4`, the regime covered by the infinite-order theorem.
    pub k_at_least_4: bool,
}

/// The numerators `p` with `1/4 ≤ p/d ≤ 2/5` for a plane curve of degree
/// `d ≥ 4`, each with the order `k` of `e^{2πip/d}` and a flag marking the
/// cases the theorem covers. Degree 6 produces exactly one fraction, `2/6`,
/// whose `k = 3 < 4` is flagged rather than hidden.
pub fn admissible_fraction(d: u64) -> Vec<AdmissibleFraction> {
    assert!(d >= 4, "plane-curve degrees below 4 have no admissible fraction");
    let lo = (d + 3) / 4; // ⌈d/4⌉
    let hi = 2 * d / 5; // ⌊2d/5⌋
    (lo..=hi)
        .map(|p| {
            let k = d / num_integer::gcd(p, d);
            AdmissibleFraction { p, k, k_at_least_4: k >= 4 }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;
    use crate::wajnryb::rep::{build_e6_rep, reference_p, wajnryb_element};

    #[test]
    fn restriction_turns_zeta4_into_the_rotation_matrix() {
        let mut m = Matrix::<Cyclotomic>::zeros(1, 1);
        m.set(0, 0, Cyclotomic::zeta(4));
        let (big, q) = restrict_scalars(&m);
        assert_eq!(q, 4);
        // Multiplication by i in the basis 1, i is the quarter rotation.
        assert_eq!(big.get(0, 0), &rat(0, 1));
        assert_eq!(big.get(1, 0), &rat(1, 1));
        assert_eq!(big.get(0, 1), &rat(-1, 1));
        assert_eq!(big.get(1, 1), &rat(0, 1));
    }

    #[test]
    fn minimal_polynomial_of_quarter_rotation() {
        let a = Matrix::<Rational>::from_rows(vec![
            vec![rat(0, 1), rat(-1, 1)],
            vec![rat(1, 1), rat(0, 1)],
        ]);
        assert_eq!(minimal_polynomial(&a), Poly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn minimal_polynomial_detects_jordan_blocks() {
        // [[1,1],[0,1]] has minimal polynomial (x−1)², so decide_order says
        // infinite even though the only eigenvalue is a root of unity.
        let mut m = Matrix::<Cyclotomic>::zeros(2, 2);
        m.set(0, 0, Cyclotomic::one());
        m.set(0, 1, Cyclotomic::one());
        m.set(1, 1, Cyclotomic::one());
        let res = decide_order(&m);
        assert_eq!(res.verdict, Verdict::Infinite);
        assert!(res.trail_summary().contains("leftover"));
    }

    #[test]
    fn identity_has_order_one() {
        let res = decide_order(&Matrix::<Cyclotomic>::identity(3));
        assert_eq!(res.verdict, Verdict::Finite(1));
    }

    #[test]
    fn reflection_generator_has_order_q() {
        let rep = build_e6_rep(4, 1).unwrap();
        let res = decide_order(&rep.gens[0]);
        assert_eq!(res.verdict, Verdict::Finite(4));
    }

    #[test]
    fn wajnryb_element_at_zeta4_has_infinite_order() {
        let rep = build_e6_rep(4, 1).unwrap();
        let word = wajnryb_element(&rep);
        // Complete path, no fast shortcut.
        let res = decide_order(&word.w);
        assert_eq!(res.verdict, Verdict::Infinite);
        // Fast path agrees via P(i) = −50.
        let p = reference_p().eval_root_of_unity(4, 1);
        assert_eq!(p.as_rational(), Some(rat(-50, 1)));
        let (fast, _) = fast_path(&p);
        assert_eq!(fast, Some(Verdict::Infinite));
        // And the combined decision short-circuits to the same verdict.
        let combined = decide_order_wajnryb(&word.w, &p);
        assert_eq!(combined.verdict, Verdict::Infinite);
        assert!(combined.trail_summary().contains("fast path"));
    }

    #[test]
    fn fast_path_is_silent_between_the_bounds() {
        let (v, trail) = fast_path(&Cyclotomic::from_i64(-2));
        assert_eq!(v, None);
        assert!(trail[0].outcome.contains("inconclusive"));
        let (v, _) = fast_path(&Cyclotomic::zeta(8));
        assert_eq!(v, Some(Verdict::Infinite));
    }

    #[test]
    fn admissible_fractions_match_reference_values() {
        let quartic = admissible_fraction(4);
        assert_eq!(quartic, vec![AdmissibleFraction { p: 1, k: 4, k_at_least_4: true }]);
        let quintic = admissible_fraction(5);
        assert_eq!(quintic, vec![AdmissibleFraction { p: 2, k: 5, k_at_least_4: true }]);
        let sextic = admissible_fraction(6);
        assert_eq!(sextic, vec![AdmissibleFraction { p: 2, k: 3, k_at_least_4: false }]);
        for d in 4..=60 {
            assert!(!admissible_fraction(d).is_empty(), "degree {d}");
        }
    }
}
