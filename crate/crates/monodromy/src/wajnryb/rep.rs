//! The E6 reflection representation and the element `W`.
//!
//! Vertices `0..6` carry the tree with edges `(1,2), (2,3), (3,4), (4,5),
//! (0,3)`. The Hermitian form on the span of `e_0, …, e_5` is normalized to
//!
//! ```text
//! h(e_i, e_i) = −1,   h(e_i, e_j) = (1−λ)⁻¹ for adjacent i < j,
//! ```
//!
//! with the mirrored entries forced by Hermitian symmetry and everything
//! else zero. Each vertex contributes the complex reflection
//! `M_i(x) = x − (λ−1)·h(x, e_i)·e_i`, which scales `e_i` by `λ` and fixes
//! the `h`-orthogonal hyperplane. Everything is generic over the scalar
//! field: the formal field `Q(λ)` (where the bar involution is `λ ↦ λ⁻¹`)
//! gives one symbolic computation valid at every unit-circle specialization,
//! and `Q(ζ_q)` gives the concrete values.
//!
//! The words under study:
//!
//! ```text
//! B  = M_3 M_2 M_4 M_3 M_1 M_5 M_2 M_4 M_3     (rightmost factor first)
//! M_0′ = B M_0 B⁻¹
//! W  = (M_0 M_0′ M_0)(M_0′ M_0 M_0′)⁻¹
//! ```
//!
//! `char_poly(W) = (x−1)⁴(x² + P(λ)x + 1)` where `P` is the degree-9
//! bar-invariant Laurent polynomial returned by [`reference_p`];
//! [`symbolic_p`] recomputes it from scratch and [`verify_symbolic`] checks
//! the braid relations, determinants, unitarity, the factorization, and the
//! palindrome property in one bundle.

use crate::matrix::Matrix;
use crate::report::VerificationRecord;
use crate::scalars::cyclotomic::Cyclotomic;
use crate::scalars::lambda::{Laurent, LambdaFunction};
use crate::scalars::poly::Poly;
use crate::scalars::Scalar;

use super::WajnrybError;

/// Edges of the E6 tree on vertices `0..6`.
pub const E6_EDGES: [(usize, usize); 5] = [(1, 2), (2, 3), (3, 4), (4, 5), (0, 3)];

/// The letters of `B`, leftmost first (so the rightmost, `M_3`, acts first).
pub const B_WORD: [usize; 9] = [3, 2, 4, 3, 1, 5, 2, 4, 3];

/// Whether vertices `i` and `j` are adjacent in the E6 tree.
pub fn adjacent(i: usize, j: usize) -> bool {
    E6_EDGES.contains(&(i, j)) || E6_EDGES.contains(&(j, i))
}

/// The reflection representation over a scalar field `F` carrying the bar
/// involution as its [`Scalar::conjugate`].
#[derive(Debug, Clone)]
pub struct ReflectionRep<F: Scalar> {
    pub lambda: F,
    /// `gram_h[i][j] = h(e_i, e_j)`.
    pub gram_h: Matrix<F>,
    /// `gens[i] = M_i`.
    pub gens: Vec<Matrix<F>>,
    /// `gens_inv[i] = M_i⁻¹ = x ↦ x − (λ⁻¹−1)·h(x,e_i)·e_i`.
    pub gens_inv: Vec<Matrix<F>>,
}

/// The matrix of `x ↦ x − (μ−1)·h(x, e_i)·e_i`; only row `i` differs from
/// the identity because `h(e_j, e_i) = gram[j][i]`.
fn reflection_generator<F: Scalar>(mu: &F, gram: &Matrix<F>, i: usize) -> Matrix<F> {
    let n = gram.rows();
    Matrix::from_fn(n, n, |r, j| {
        let diag = if r == j { F::one() } else { F::zero() };
        if r == i {
            diag - (mu.clone() - F::one()) * gram.get(j, i).clone()
        } else {
            diag
        }
    })
}

impl<F: Scalar> ReflectionRep<F> {
    /// The standard normalization: diagonal `−1`, adjacent entries
    /// `(1−λ)⁻¹` above the diagonal and the conjugate below.
    pub fn new(lambda: F) -> Result<Self, WajnrybError> {
        let c = (F::one() - lambda.clone())
            .inv()
            .ok_or(WajnrybError::DegenerateLambda)?;
        let c_bar = c.conjugate();
        let gram = Matrix::from_fn(6, 6, |i, j| {
            if i == j {
                -F::one()
            } else if adjacent(i, j) {
                if i < j {
                    c.clone()
                } else {
                    c_bar.clone()
                }
            } else {
                F::zero()
            }
        });
        Self::with_gram(lambda, gram)
    }

    /// Builds the generators from an explicit Hermitian gram — used by
    /// [`rescale_basis`](Self::rescale_basis), which perturbs the
    /// normalization by unit phases. Panics if a generator fails to be an
    /// involution-compatible unit (`M_i·M_i⁻¹ ≠ 1`), which would mean the
    /// gram is not Hermitian or `λ` is not a unit for the involution.
    pub fn with_gram(lambda: F, gram_h: Matrix<F>) -> Result<Self, WajnrybError> {
        let lambda_inv = lambda.inv().ok_or(WajnrybError::DegenerateLambda)?;
        let n = gram_h.rows();
        let gens: Vec<_> = (0..n).map(|i| reflection_generator(&lambda, &gram_h, i)).collect();
        let gens_inv: Vec<_> =
            (0..n).map(|i| reflection_generator(&lambda_inv, &gram_h, i)).collect();
        for i in 0..n {
            assert!(
                gens[i].mul(&gens_inv[i]).is_identity(),
                "M_{i} and its reflection-formula inverse must compose to the identity"
            );
        }
        Ok(ReflectionRep { lambda, gram_h, gens, gens_inv })
    }

    /// `h(x, y) = Σ x_i·gram[i][j]·conjugate(y_j)` — linear in `x`,
    /// conjugate-linear in `y`.
    pub fn hermitian(&self, x: &[F], y: &[F]) -> F {
        let y_bar: Vec<F> = y.iter().map(Scalar::conjugate).collect();
        let gy = self.gram_h.mul_vec(&y_bar);
        let mut acc = F::zero();
        for (a, b) in x.iter().zip(gy.iter()) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    }

    /// Whether `m` preserves the form: `mᵀ·gram·conj(m) = gram`.
    pub fn is_h_unitary(&self, m: &Matrix<F>) -> bool {
        m.transpose().mul(&self.gram_h).mul(&m.map(Scalar::conjugate)) == self.gram_h
    }

    /// The representation in the basis with `e_i` replaced by `u·e_i`, `u` a
    /// unit (`u·ū = 1`). The form picks up phases but the words built from
    /// the new generators are conjugate to the old ones, so every spectral
    /// quantity — in particular `char_poly(W)` — is unchanged.
    pub fn rescale_basis(&self, i: usize, u: &F) -> Result<Self, WajnrybError> {
        assert!(
            (u.clone() * u.conjugate()).is_one(),
            "basis rescaling must be by a unit of the bar involution"
        );
        let n = self.gram_h.rows();
        let gram = Matrix::from_fn(n, n, |r, c| {
            let mut v = self.gram_h.get(r, c).clone();
            if r == i {
                v = u.clone() * v;
            }
            if c == i {
                v = v * u.conjugate();
            }
            v
        });
        Self::with_gram(self.lambda.clone(), gram)
    }
}

/// The representation over the formal field `Q(λ)` — one computation valid
/// for every unit-circle specialization at once.
pub fn build_e6_rep_symbolic() -> ReflectionRep<LambdaFunction> {
    ReflectionRep::new(LambdaFunction::lambda()).expect("the variable λ is not 1 in Q(λ)")
}

/// The representation specialized at `λ = ζ_q^p`.
pub fn build_e6_rep(q: u64, p: u64) -> Result<ReflectionRep<Cyclotomic>, WajnrybError> {
    let lambda = Cyclotomic::root_of_unity(q, p);
    if lambda.is_one() {
        return Err(WajnrybError::DegenerateLambda);
    }
    ReflectionRep::new(lambda)
}

/// The words `B`, `M_0′`, `W` (with the inverses that come for free).
#[derive(Debug, Clone)]
pub struct WajnrybWord<F: Scalar> {
    pub b: Matrix<F>,
    pub b_inv: Matrix<F>,
    pub m0_prime: Matrix<F>,
    pub m0_prime_inv: Matrix<F>,
    pub w: Matrix<F>,
}

/// Builds `B = M_3M_2M_4M_3M_1M_5M_2M_4M_3`, `M_0′ = BM_0B⁻¹`, and
/// `W = (M_0M_0′M_0)(M_0′M_0M_0′)⁻¹`. Products apply the rightmost factor
/// first throughout the crate.
pub fn wajnryb_element<F: Scalar>(rep: &ReflectionRep<F>) -> WajnrybWord<F> {
    let n = rep.gram_h.rows();
    let mut b: Matrix<F> = Matrix::identity(n);
    for &i in &B_WORD {
        b = b.mul(&rep.gens[i]);
    }
    let mut b_inv: Matrix<F> = Matrix::identity(n);
    for &i in B_WORD.iter().rev() {
        b_inv = b_inv.mul(&rep.gens_inv[i]);
    }
    assert!(b.mul(&b_inv).is_identity(), "B·B⁻¹ = 1");
    let m0 = &rep.gens[0];
    let m0_inv = &rep.gens_inv[0];
    let m0_prime = b.mul(m0).mul(&b_inv);
    let m0_prime_inv = b.mul(m0_inv).mul(&b_inv);
    let w = m0
        .mul(&m0_prime)
        .mul(m0)
        .mul(&m0_prime_inv)
        .mul(m0_inv)
        .mul(&m0_prime_inv);
    WajnrybWord { b, b_inv, m0_prime, m0_prime_inv, w }
}

/// The eigenvalue polynomial
///
/// ```text
/// P(λ) = λ⁻⁹(−λ¹⁸ + 3λ¹⁷ − λ¹⁶ − 8λ¹⁵ + 13λ¹⁴ + λ¹³ − 23λ¹² + 20λ¹¹
///        + 12λ¹⁰ − 34λ⁹ + 12λ⁸ + 20λ⁷ − 23λ⁶ + λ⁵ + 13λ⁴ − 8λ³ − λ² + 3λ − 1)
/// ```
///
/// whose two companion roots are the non-unit eigenvalues of `W`.
pub fn reference_p() -> Laurent {
    Laurent::from_i64(
        -9,
        &[-1, 3, -1, -8, 13, 1, -23, 20, 12, -34, 12, 20, -23, 1, 13, -8, -1, 3, -1],
    )
}

/// Divides `(x−1)⁴` out of `char_poly(W)` and returns `P`: the middle
/// coefficient of the remaining monic quadratic `x² + Px + 1`.
pub fn extract_p<F: Scalar>(cp: &Poly<F>) -> Result<F, WajnrybError> {
    let linear = Poly::from_coeffs(vec![-F::one(), F::one()]); // x − 1
    let mut quotient = cp.clone();
    for pass in 1..=4u32 {
        let (q, r) = quotient.divrem(&linear).expect("x − 1 is nonzero");
        if !r.is_zero() {
            return Err(WajnrybError::FactorizationMismatch {
                details: format!("(x−1)^{pass} does not divide the characteristic polynomial"),
            });
        }
        quotient = q;
    }
    if quotient.degree() != Some(2) || !quotient.is_monic() {
        return Err(WajnrybError::FactorizationMismatch {
            details: "the quotient by (x−1)⁴ is not a monic quadratic".into(),
        });
    }
    if !quotient.coeff(0).is_one() {
        return Err(WajnrybError::FactorizationMismatch {
            details: format!("quadratic constant term is {} ≠ 1", quotient.coeff(0)),
        });
    }
    Ok(quotient.coeff(1))
}

/// Recomputes `P` over `Q(λ)` from scratch: representation → `W` →
/// characteristic polynomial → quadratic factor.
pub fn symbolic_p() -> Result<Laurent, WajnrybError> {
    let rep = build_e6_rep_symbolic();
    let word = wajnryb_element(&rep);
    let p = extract_p(&word.w.char_poly())?;
    p.as_laurent().ok_or_else(|| WajnrybError::FactorizationMismatch {
        details: "P is not a Laurent polynomial in λ".into(),
    })
}

fn poly_pow<F: Scalar>(base: &Poly<F>, e: u32) -> Poly<F> {
    let mut acc = Poly::one();
    for _ in 0..e {
        acc = acc * base.clone();
    }
    acc
}

/// The one-shot symbolic verification over `Q(λ)`: braid relations,
/// commutation, unitarity, determinants, the factorization of
/// `char_poly(W)`, the golden coefficient list for `P`, its palindrome
/// property, `P(1) = −2`, the geometric rank data at eigenvalue 1, and the
/// gauge invariance of `char_poly(W)` under a unit basis rescaling.
pub fn verify_symbolic() -> Result<VerificationRecord, WajnrybError> {
    let mut rec = VerificationRecord::new();
    let rep = build_e6_rep_symbolic();
    let lambda = rep.lambda.clone();

    let mut braid_ok = true;
    let mut commute_ok = true;
    for i in 0..6 {
        for j in (i + 1)..6 {
            let a = &rep.gens[i];
            let b = &rep.gens[j];
            if adjacent(i, j) {
                if a.mul(b).mul(a) != b.mul(a).mul(b) {
                    braid_ok = false;
                }
            } else if a.mul(b) != b.mul(a) {
                commute_ok = false;
            }
        }
    }
    rec.record("symbolic: braid relation M_iM_jM_i = M_jM_iM_j on all 5 edges", "§5", braid_ok, "");
    rec.record(
        "symbolic: non-adjacent generators commute (10 pairs)",
        "§5",
        commute_ok,
        "",
    );

    let scaling_ok = (0..6).all(|i| {
        let mut e = vec![LambdaFunction::zero(); 6];
        e[i] = LambdaFunction::one();
        rep.gens[i].mul_vec(&e) == e.iter().map(|x| x.clone() * lambda.clone()).collect::<Vec<_>>()
    });
    rec.record(
        "symbolic: M_i(e_i) = λ·e_i for all i",
        "Corollary \"monformula\"",
        scaling_ok,
        "",
    );
    rec.record(
        "symbolic: each M_i is h-unitary",
        "§5",
        rep.gens.iter().all(|m| rep.is_h_unitary(m)),
        "",
    );
    rec.record(
        "symbolic: det(M_i) = λ for all i",
        "§5",
        rep.gens.iter().all(|m| m.det() == lambda),
        "",
    );
    rec.record(
        "symbolic: M_i⁻¹ = x ↦ x − (λ⁻¹−1)h(x,e_i)e_i",
        "§5",
        (0..6).all(|i| rep.gens[i].mul(&rep.gens_inv[i]).is_identity()),
        "",
    );

    let mut word = None;
    rec.timed("symbolic: build B, M_0′, W over Q(λ)", "§5", || {
        word = Some(wajnryb_element(&rep));
        (true, String::new())
    });
    let word = word.unwrap();
    rec.record(
        "symbolic: det(B) = λ⁹",
        "§5",
        word.b.det() == lambda.pow_u(9),
        "",
    );
    rec.record("symbolic: det(W) = 1", "§5", word.w.det().is_one(), "");
    rec.record(
        "symbolic: B, M_0′, W are h-unitary",
        "§5",
        rep.is_h_unitary(&word.b) && rep.is_h_unitary(&word.m0_prime) && rep.is_h_unitary(&word.w),
        "",
    );

    let x = Poly::<LambdaFunction>::x();
    let one = Poly::<LambdaFunction>::one();
    let m0_expected =
        (x.clone() - Poly::constant(lambda.clone())) * poly_pow(&(x.clone() - one.clone()), 5);
    rec.record(
        "symbolic: char_poly(M_0) = (x−λ)(x−1)⁵",
        "Lemma \"eigenvalues\"",
        rep.gens[0].char_poly() == m0_expected,
        "",
    );

    let mut cp = None;
    rec.timed("symbolic: char_poly(W) over Q(λ)", "Lemma \"eigenvalues\"", || {
        cp = Some(word.w.char_poly());
        (true, String::new())
    });
    let cp = cp.unwrap();
    let p = extract_p(&cp)?;
    let p_laurent = p.as_laurent().ok_or_else(|| WajnrybError::FactorizationMismatch {
        details: "P is not a Laurent polynomial in λ".into(),
    })?;
    rec.record(
        "symbolic: char_poly(W) = (x−1)⁴(x² + P(λ)x + 1)",
        "Lemma \"eigenvalues\"",
        true,
        format!("P(λ) = {p_laurent}"),
    );
    let golden = reference_p();
    rec.record(
        "symbolic: P matches the printed coefficient list",
        "Lemma \"eigenvalues\"",
        p_laurent == golden,
        "",
    );
    rec.record(
        "symbolic: P(λ) = P(λ⁻¹) (palindromic coefficients)",
        "Lemma \"eigenvalues\"",
        p_laurent.is_bar_invariant(),
        "",
    );
    rec.record(
        "symbolic: P(1) = −2 (the quadratic degenerates to (x−1)²)",
        "Lemma \"eigenvalues\"",
        p_laurent.eval_rational(&crate::scalars::rational::rat(1, 1))
            == crate::scalars::rational::rat(-2, 1),
        "",
    );

    let w_minus_i = word.w.sub(&Matrix::identity(6));
    let r1 = w_minus_i.rank();
    let r2 = w_minus_i.mul(&w_minus_i).rank();
    rec.record(
        "symbolic: rank(W−1) = 2; rank((W−1)²) recorded",
        "Lemma \"eigenvalues\"",
        r1 == 2,
        format!("rank(W−1) = {r1}, rank((W−1)²) = {r2}"),
    );

    rec.timed(
        "symbolic: char_poly(W) is invariant under the basis gauge e_2 ↦ −λ·e_2",
        "§5",
        || {
            let rescaled = rep.rescale_basis(2, &-lambda.clone()).expect("−λ is a unit");
            let w2 = wajnryb_element(&rescaled).w;
            (w2.char_poly() == cp, String::new())
        },
    );

    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    fn lam() -> LambdaFunction {
        LambdaFunction::lambda()
    }

    #[test]
    fn e6_tree_has_the_right_degrees() {
        let degree = |v: usize| (0..6).filter(|&u| u != v && adjacent(u, v)).count();
        assert_eq!(degree(0), 1);
        assert_eq!(degree(1), 1);
        assert_eq!(degree(5), 1);
        assert_eq!(degree(2), 2);
        assert_eq!(degree(4), 2);
        assert_eq!(degree(3), 3);
    }

    #[test]
    fn adjacent_pair_restriction_matches_reference() {
        // On the coordinates (e_1, e_2) the generators act by
        // M_1 = [[λ, −λ], [0, 1]] and M_2 = [[1, 0], [1, λ]], and both braid
        // products restrict to [[0, −λ²], [λ, 0]].
        let rep = build_e6_rep_symbolic();
        let sub = |m: &Matrix<LambdaFunction>| {
            [
                m.get(1, 1).clone(),
                m.get(1, 2).clone(),
                m.get(2, 1).clone(),
                m.get(2, 2).clone(),
            ]
        };
        let one = LambdaFunction::one();
        assert_eq!(
            sub(&rep.gens[1]),
            [lam(), -lam(), LambdaFunction::zero(), one.clone()]
        );
        assert_eq!(sub(&rep.gens[2]), [one, LambdaFunction::zero(), LambdaFunction::one(), lam()]);
        let lhs = rep.gens[1].mul(&rep.gens[2]).mul(&rep.gens[1]);
        let rhs = rep.gens[2].mul(&rep.gens[1]).mul(&rep.gens[2]);
        assert_eq!(lhs, rhs);
        let braid = sub(&lhs);
        assert_eq!(
            braid,
            [
                LambdaFunction::zero(),
                -(lam() * lam()),
                lam(),
                LambdaFunction::zero()
            ]
        );
    }

    #[test]
    fn cyclotomic_rep_satisfies_the_basic_identities() {
        let rep = build_e6_rep(7, 2).unwrap();
        for i in 0..6 {
            assert!(rep.is_h_unitary(&rep.gens[i]));
            assert_eq!(rep.gens[i].det(), rep.lambda);
        }
        for i in 0..6 {
            for j in (i + 1)..6 {
                let a = &rep.gens[i];
                let b = &rep.gens[j];
                if adjacent(i, j) {
                    assert_eq!(a.mul(b).mul(a), b.mul(a).mul(b), "braid {i},{j}");
                } else {
                    assert_eq!(a.mul(b), b.mul(a), "commute {i},{j}");
                }
            }
        }
    }

    #[test]
    fn degenerate_lambda_is_rejected() {
        assert_eq!(build_e6_rep(5, 0).unwrap_err(), WajnrybError::DegenerateLambda);
        assert_eq!(build_e6_rep(1, 1).unwrap_err(), WajnrybError::DegenerateLambda);
    }

    #[test]
    fn word_determinants_at_a_specialization() {
        let rep = build_e6_rep(4, 1).unwrap();
        let word = wajnryb_element(&rep);
        assert_eq!(word.b.det(), rep.lambda.pow_u(9));
        assert!(word.w.det().is_one());
        assert!(rep.is_h_unitary(&word.w));
        // W ≠ 1 at q = 4.
        assert!(!word.w.is_identity());
    }

    #[test]
    fn extract_p_demands_the_right_shape() {
        // char_poly(M_0) = (x−λ)(x−1)⁵ is divisible by (x−1)⁴ but the
        // quadratic quotient has constant term λ ≠ 1.
        let rep = build_e6_rep(5, 1).unwrap();
        let err = extract_p(&rep.gens[0].char_poly()).unwrap_err();
        assert!(matches!(err, WajnrybError::FactorizationMismatch { .. }));
        // The identity passes the shape test with P = −2.
        let id: Matrix<Cyclotomic> = Matrix::identity(6);
        assert_eq!(extract_p(&id.char_poly()).unwrap(), Cyclotomic::from_i64(-2));
    }

    #[test]
    fn reference_p_is_palindromic_and_sums_to_minus_two() {
        let p = reference_p();
        assert!(p.is_bar_invariant());
        assert_eq!(p.eval_rational(&rat(1, 1)), rat(-2, 1));
        assert_eq!(p.coeff(0), rat(-34, 1));
        assert_eq!(p.coeff(9), rat(-1, 1));
        assert_eq!(p.coeff(-9), rat(-1, 1));
    }

    #[test]
    fn specialized_char_poly_matches_reference_p() {
        // Cheap stand-in for the full symbolic run: at λ = ζ_4 the quadratic
        // factor's middle coefficient must equal P(ζ_4) computed from the
        // printed coefficients.
        let rep = build_e6_rep(4, 1).unwrap();
        let word = wajnryb_element(&rep);
        let p = extract_p(&word.w.char_poly()).unwrap();
        assert_eq!(p, reference_p().eval_root_of_unity(4, 1));
    }
}
