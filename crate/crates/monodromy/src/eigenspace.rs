//! The λ-eigenspace of the deck transformation and its complex-reflection
//! monodromy.
//!
//! Fix a Milnor lattice with deck transformation `σ` of order `k` and a
//! `k`-th root of unity `λ ≠ 1`. Working over `Q(ζ_k)`, the projector
//!
//! ```text
//! P_λ = (1/k) Σ_{i=1}^{k} λ̄^i σ^i
//! ```
//!
//! maps onto the λ-eigenspace of `σ`, and the class `ξ = P_λ(δ_1)` (per
//! branch, in the cusp case) generates the part of the eigenspace the
//! monodromy acts on. The Hermitian form is `h(x, y) = (x, ȳ)` — linear in
//! `x`, conjugate-linear in `y`. Two numbers anchor everything:
//!
//! * the self-pairing `h(ξ, ξ) = (1/k)(1−λ)(λ̄−1)`, a negative real;
//! * the cross-pairing `h(ξ_α, ξ_β) = (1−λ)/k` on the cusp lattice.
//!
//! Because `Q(ζ_k)` rarely contains the square root needed to scale `ξ` to a
//! unit vector `η` with `h(η,η) = −1`, the normalization is kept *implicit*:
//! every formula below uses the pair `(ξ, c)` with `c = −1/h(ξ,ξ)`, which is
//! exactly the combination `h(·,η)η` that the reflection formulas consume.
//! [`verify_reflection`] confirms that the restriction of the lattice
//! monodromy `T` to the eigenspace is the complex reflection
//! `v ↦ v + (λ̄−1)·h(v,ξ)/h(ξ,ξ)·ξ` (so `T` realizes `λ̄` and `T⁻¹` realizes
//! `λ`), and [`verify_pairing_table`] checks the pairing table and the
//! monodromy formulas `T_β(η_β) = λη_β`, `T_β(η_α) = η_α + η_β`,
//! `T_α(η_β) = η_β − λη_α` after the phase gauge `η_β ↦ −λ·η_β` that makes
//! `h(η_α, η_β) = 1/(1−λ)`.

use thiserror::Error;

use crate::lattice::{
    branch_monodromies, build_ak_lattice, build_cusp_lattice, coxeter_monodromy, deck_map,
    twist_product, LatticeError, MilnorLattice,
};
use crate::matrix::{IntMatrix, Matrix};
use crate::report::VerificationRecord;
use crate::scalars::cyclotomic::Cyclotomic;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    /// The supplied scalar does not satisfy `λ^k = 1`.
    #[error("scalar is not a k-th root of unity for k = {k}")]
    NotRootOfUnity { k: u64 },
    /// `λ = 1` is excluded: the constructions divide by `1 − λ`.
    #[error("λ = 1 is degenerate: the eigenspace machinery divides by 1 − λ")]
    DegenerateLambda,
    #[error("vector length {found} does not match the lattice rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    /// A documented identity failed — an implementation fault, not a
    /// condition that can arise from valid inputs.
    #[error("identity failed: {identity} ({witness})")]
    VerificationFailed { identity: String, witness: String },
    /// No unit phase `±ζ_k^j` achieves `h(η_α, η_β) = 1/(1−λ)`; impossible
    /// if the pairing table holds.
    #[error("no unit phase ±ζ^j gauges h(η_α,η_β) to 1/(1−λ) at k = {k}, p = {p}")]
    GaugeImpossible { k: u64, p: u64 },
}

/// Which lattice the context was built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextKind {
    /// The `A_{k−1}` node lattice — one branch.
    Node,
    /// The cusp-suspension lattice — two interleaved branches.
    Cusp,
    /// Two h-orthogonal `A_{k−1}` blocks — two branches with disjoint
    /// supports, modeling vanishing cycles that do not intersect.
    Disjoint,
}

/// One branch of vanishing cycles (the node lattice has only `Alpha`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Alpha,
    Beta,
}

/// A lattice together with a choice of eigenvalue `λ = ζ_k^p ≠ 1` of the
/// deck transformation, everything lifted to `Q(ζ_k)`.
#[derive(Debug, Clone)]
pub struct EigenContext {
    pub lattice: MilnorLattice,
    pub kind: ContextKind,
    pub k: u64,
    /// `λ = ζ_k^p` with `p mod k ≠ 0`.
    pub p: u64,
    pub lambda: Cyclotomic,
    /// The deck transformation over `Q(ζ_k)`.
    pub sigma: Matrix<Cyclotomic>,
    /// The intersection form over `Q(ζ_k)`.
    pub gram: Matrix<Cyclotomic>,
    /// Start index of each branch's chain in the basis.
    blocks: Vec<usize>,
    /// Per-branch monodromy: the product of the branch's twists, first chain
    /// vector applied first.
    monodromies: Vec<Matrix<Cyclotomic>>,
}

/// A vector certified to lie in the λ-eigenspace (`σ·v = λ·v` exactly).
#[derive(Debug, Clone, PartialEq)]
pub struct EigenVector {
    pub coords: Vec<Cyclotomic>,
}

impl EigenContext {
    /// Context on the `A_{k−1}` node lattice with `λ = ζ_k^p`.
    pub fn node(k: u64, p: u64) -> Result<Self, EigenError> {
        let lattice = build_ak_lattice(k)?;
        let sigma = deck_map(&lattice)?.matrix;
        let t = coxeter_monodromy(&lattice)?.matrix;
        Self::assemble(lattice, ContextKind::Node, k, p, sigma, vec![0], vec![t])
    }

    /// Context on the cusp-suspension lattice with `λ = ζ_k^p`.
    pub fn cusp(k: u64, p: u64) -> Result<Self, EigenError> {
        let lattice = build_cusp_lattice(k)?;
        let sigma = deck_map(&lattice)?.matrix;
        let (t_alpha, t_beta) = branch_monodromies(&lattice)?;
        let n = (k - 1) as usize;
        Self::assemble(
            lattice,
            ContextKind::Cusp,
            k,
            p,
            sigma,
            vec![0, n],
            vec![t_alpha.matrix, t_beta.matrix],
        )
    }

    /// Context on two h-orthogonal `A_{k−1}` blocks — the model for a pair
    /// of vanishing cycles with disjoint supports.
    pub fn disjoint(k: u64, p: u64) -> Result<Self, EigenError> {
        let node = build_ak_lattice(k)?;
        let n = node.rank;
        let gram = IntMatrix::from_fn(2 * n, |i, j| {
            if (i < n) == (j < n) {
                node.gram.get(i % n, j % n)
            } else {
                0
            }
        });
        let labels = (1..k)
            .map(|i| format!("ε_α,{i}"))
            .chain((1..k).map(|i| format!("ε_β,{i}")))
            .collect();
        let lattice = MilnorLattice::from_parts(k, gram, labels);
        let sigma_block = deck_map(&node)?.matrix;
        let sigma = IntMatrix::from_fn(2 * n, |i, j| {
            if (i < n) == (j < n) {
                sigma_block.get(i % n, j % n)
            } else {
                0
            }
        });
        let t_alpha = twist_product(&lattice, 0..n)?.matrix;
        let t_beta = twist_product(&lattice, n..2 * n)?.matrix;
        Self::assemble(
            lattice,
            ContextKind::Disjoint,
            k,
            p,
            sigma,
            vec![0, n],
            vec![t_alpha, t_beta],
        )
    }

    /// Builds a context from a lattice and an explicit cyclotomic `λ`,
    /// validating `λ^k = 1` and `λ ≠ 1`. `λ` must be presented in `Q(ζ_k)`
    /// (or be rational) so the exponent `p` can be recovered.
    pub fn with_lambda(lattice: MilnorLattice, lambda: Cyclotomic) -> Result<Self, EigenError> {
        let k = lattice.k;
        if !lambda.pow_u(k).is_one() {
            return Err(EigenError::NotRootOfUnity { k });
        }
        let p = (1..k)
            .find(|&p| lambda == Cyclotomic::root_of_unity(k, p))
            .ok_or(EigenError::NotRootOfUnity { k })?;
        use crate::lattice::LatticeShape;
        match lattice.shape() {
            Some(LatticeShape::Node) => Self::node(k, p),
            Some(LatticeShape::Cusp) => Self::cusp(k, p),
            None => Err(LatticeError::UnsupportedLattice.into()),
        }
    }

    fn assemble(
        lattice: MilnorLattice,
        kind: ContextKind,
        k: u64,
        p: u64,
        sigma_int: IntMatrix,
        blocks: Vec<usize>,
        monodromies_int: Vec<IntMatrix>,
    ) -> Result<Self, EigenError> {
        if p % k == 0 {
            return Err(EigenError::DegenerateLambda);
        }
        let lambda = Cyclotomic::root_of_unity(k, p);
        Ok(EigenContext {
            kind,
            k,
            p,
            lambda,
            sigma: sigma_int.lift(),
            gram: lattice.gram.lift(),
            blocks,
            monodromies: monodromies_int.iter().map(IntMatrix::lift).collect(),
            lattice,
        })
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank
    }

    /// How many branches of vanishing cycles the context carries.
    pub fn branches(&self) -> &'static [Branch] {
        match self.kind {
            ContextKind::Node => &[Branch::Alpha],
            _ => &[Branch::Alpha, Branch::Beta],
        }
    }

    /// The lattice monodromy attached to a branch: the Coxeter-style product
    /// of the branch's twists, lifted to `Q(ζ_k)`.
    pub fn monodromy(&self, branch: Branch) -> &Matrix<Cyclotomic> {
        match branch {
            Branch::Alpha => &self.monodromies[0],
            Branch::Beta => self
                .monodromies
                .get(1)
                .expect("the node lattice has a single branch (α)"),
        }
    }

    fn block_start(&self, branch: Branch) -> usize {
        match branch {
            Branch::Alpha => self.blocks[0],
            Branch::Beta => *self
                .blocks
                .get(1)
                .expect("the node lattice has a single branch (α)"),
        }
    }

    /// Short tag used to make check names unique across grids,
    /// e.g. `node k=4 ζ_4^1`.
    pub fn label(&self) -> String {
        let kind = match self.kind {
            ContextKind::Node => "node",
            ContextKind::Cusp => "cusp",
            ContextKind::Disjoint => "disjoint",
        };
        format!("{kind} k={} ζ_{}^{}", self.k, self.k, self.p)
    }

    /// Wraps coordinates after verifying membership in the λ-eigenspace.
    pub fn eigenvector(&self, coords: Vec<Cyclotomic>) -> Result<EigenVector, EigenError> {
        if coords.len() != self.rank() {
            return Err(EigenError::DimensionMismatch {
                expected: self.rank(),
                found: coords.len(),
            });
        }
        let image = self.sigma.mul_vec(&coords);
        for (i, (got, v)) in image.iter().zip(coords.iter()).enumerate() {
            if *got != self.lambda.clone() * v.clone() {
                return Err(EigenError::VerificationFailed {
                    identity: "σ·v = λ·v".into(),
                    witness: format!("coordinate {i} differs"),
                });
            }
        }
        Ok(EigenVector { coords })
    }

    /// `h(x, y) = Σ_{i,j} x_i·gram_{ij}·conjugate(y_j)` without dimension
    /// checks (callers inside the module guarantee lengths).
    fn h(&self, x: &[Cyclotomic], y: &[Cyclotomic]) -> Cyclotomic {
        let y_bar: Vec<Cyclotomic> = y.iter().map(Scalar::conjugate).collect();
        let gy = self.gram.mul_vec(&y_bar);
        let mut acc = Cyclotomic::zero();
        for (a, b) in x.iter().zip(gy.iter()) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    }

    /// `−1/h(ξ,ξ)` — the positive real scale standing in for the missing
    /// square root in the normalization `h(η,η) = −1`.
    fn normalization_scale(&self, xi: &EigenVector) -> Cyclotomic {
        let self_pairing = self.h(&xi.coords, &xi.coords);
        (-self_pairing).inv().expect("h(ξ,ξ) ≠ 0 for λ ≠ 1")
    }

    /// The complex reflection `x ↦ x − (μ−1)·scale·h(x,m)·m` as a matrix.
    /// With `μ = λ` and `scale = −1/h(m,m)` this is the monodromy formula in
    /// the convention realizing `λ`; with `μ = λ̄` it realizes `λ̄`.
    fn reflection(&self, mu: &Cyclotomic, scale: &Cyclotomic, mirror: &[Cyclotomic]) -> Matrix<Cyclotomic> {
        let n = self.rank();
        let factor = mu.clone() - Cyclotomic::one();
        // h(e_j, m) = (gram · m̄)_j since gram is symmetric.
        let m_bar: Vec<Cyclotomic> = mirror.iter().map(Scalar::conjugate).collect();
        let h_basis = self.gram.mul_vec(&m_bar);
        Matrix::from_fn(n, n, |i, j| {
            let correction =
                factor.clone() * scale.clone() * h_basis[j].clone() * mirror[i].clone();
            let diag = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            diag - correction
        })
    }
}

/// The projector `P_λ = (1/k) Σ_{i=1}^{k} λ̄^i σ^i` onto the λ-eigenspace.
pub fn projector(ctx: &EigenContext) -> Matrix<Cyclotomic> {
    let n = ctx.rank();
    let lambda_bar = ctx.lambda.conjugate();
    let mut acc: Matrix<Cyclotomic> = Matrix::zeros(n, n);
    let mut sigma_pow: Matrix<Cyclotomic> = Matrix::identity(n);
    let mut coeff = Cyclotomic::one();
    for _ in 1..=ctx.k {
        sigma_pow = ctx.sigma.mul(&sigma_pow);
        coeff = coeff * lambda_bar.clone();
        acc = acc.add(&sigma_pow.scale(&coeff));
    }
    acc.map(|c| c.div_nat(ctx.k))
}

/// The Hermitian form `h(x, y) = (x, ȳ)`: linear in `x`, conjugate-linear
/// in `y`.
pub fn hermitian(
    ctx: &EigenContext,
    x: &[Cyclotomic],
    y: &[Cyclotomic],
) -> Result<Cyclotomic, EigenError> {
    for v in [x, y] {
        if v.len() != ctx.rank() {
            return Err(EigenError::DimensionMismatch {
                expected: ctx.rank(),
                found: v.len(),
            });
        }
    }
    Ok(ctx.h(x, y))
}

/// `ξ = P_λ(δ_1)` of the requested branch (the cusp lattice has two).
/// Panics if `Beta` is requested on the node lattice.
pub fn xi_class(ctx: &EigenContext, branch: Branch) -> Result<EigenVector, EigenError> {
    let p = projector(ctx);
    ctx.eigenvector(p.column(ctx.block_start(branch)))
}

fn scale_vec(v: &[Cyclotomic], c: &Cyclotomic) -> Vec<Cyclotomic> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

fn add_vec(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b.iter()).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn sub_vec(a: &[Cyclotomic], b: &[Cyclotomic]) -> Vec<Cyclotomic> {
    a.iter().zip(b.iter()).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn is_zero_vec(v: &[Cyclotomic]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `(1/k)(1−λ)(λ̄−1)` — the predicted self-pairing `h(ξ,ξ)`.
fn predicted_self_pairing(ctx: &EigenContext) -> Cyclotomic {
    let one = Cyclotomic::one();
    ((one.clone() - ctx.lambda.clone()) * (ctx.lambda.conjugate() - one)).div_nat(ctx.k)
}

/// Verifies the eigenspace identities on one context: projector laws, the
/// self-pairing value and its sign, the reflection formula for the lattice
/// monodromy in both conventions, the operator identity
/// `Q_λ = (k/(1−λ))·P_λ` on the eigenspace, the `h`-invariance of the
/// projector, `h`-unitarity of `σ`, and the gauge invariance of the
/// reflection. Every check lands in the returned record; if any fails, the
/// whole run is converted into [`EigenError::VerificationFailed`] naming the
/// first offender — such a failure is an implementation fault.
pub fn verify_reflection(ctx: &EigenContext) -> Result<VerificationRecord, EigenError> {
    let mut rec = VerificationRecord::new();
    let tag = ctx.label();
    let one = Cyclotomic::one();
    let lambda = ctx.lambda.clone();
    let lambda_bar = lambda.conjugate();
    let p = projector(ctx);

    rec.record(
        format!("{tag}: P_λ² = P_λ"),
        "§4",
        p.mul(&p) == p,
        "",
    );
    let sp = ctx.sigma.mul(&p);
    rec.record(
        format!("{tag}: σ·P_λ = λ·P_λ"),
        "§4",
        sp == p.scale(&lambda),
        "",
    );
    let expected_rank = ctx.blocks.len();
    let rank = p.rank();
    rec.record(
        format!("{tag}: rank P_λ = {expected_rank}"),
        "§4",
        rank == expected_rank,
        format!("rank {rank}"),
    );

    // Branch-independent form facts.
    rec.record(
        format!("{tag}: h is Hermitian on the basis"),
        "§4",
        ctx.gram.conj_transpose() == ctx.gram,
        "",
    );
    rec.record(
        format!("{tag}: σ is h-unitary"),
        "Lemma \"hformula\"",
        ctx.sigma.transpose().mul(&ctx.gram).mul(&ctx.sigma.map(Scalar::conjugate)) == ctx.gram,
        "",
    );
    // h(v, P_λ w) = h(v, w) for v in the eigenspace: as matrices,
    // Pᵀ·G·conj(P) = Pᵀ·G.
    let pt_g = p.transpose().mul(&ctx.gram);
    rec.record(
        format!("{tag}: h(v, P_λ·w) = h(v, w) on the eigenspace"),
        "Lemma \"hformula\"",
        pt_g.mul(&p.map(Scalar::conjugate)) == pt_g,
        "",
    );
    // Q_λ = (k/(1−λ))·P_λ on the eigenspace, as Q·P = (k/(1−λ))·P.
    let q = {
        let n = ctx.rank();
        let mut acc: Matrix<Cyclotomic> = Matrix::zeros(n, n);
        let mut sigma_pow: Matrix<Cyclotomic> = Matrix::identity(n);
        let mut geom = Cyclotomic::zero(); // 1 + λ̄ + … + λ̄^i
        let mut bar_pow = Cyclotomic::one();
        for i in 0..=(ctx.k - 2) {
            geom = geom + bar_pow.clone();
            bar_pow = bar_pow * lambda_bar.clone();
            if i > 0 {
                sigma_pow = ctx.sigma.mul(&sigma_pow);
            }
            acc = acc.add(&sigma_pow.scale(&geom));
        }
        acc
    };
    let k_over = Cyclotomic::from_i64(ctx.k as i64)
        * (one.clone() - lambda.clone()).inv().expect("λ ≠ 1");
    rec.record(
        format!("{tag}: Q_λ = (k/(1−λ))·P_λ on the eigenspace"),
        "Prop \"reflection\"",
        q.mul(&p) == p.scale(&k_over),
        "",
    );

    for &branch in ctx.branches() {
        let btag = match branch {
            Branch::Alpha => format!("{tag} α"),
            Branch::Beta => format!("{tag} β"),
        };
        let xi = xi_class(ctx, branch)?;
        let t = ctx.monodromy(branch);

        let sigma_xi = ctx.sigma.mul_vec(&xi.coords);
        rec.record(
            format!("{btag}: σ·ξ = λ·ξ"),
            "§4",
            sigma_xi == scale_vec(&xi.coords, &lambda),
            "",
        );
        let self_pairing = ctx.h(&xi.coords, &xi.coords);
        let predicted = predicted_self_pairing(ctx);
        rec.record(
            format!("{btag}: h(ξ,ξ) = (1/k)(1−λ)(λ̄−1)"),
            "Eq. (2)",
            self_pairing == predicted,
            format!("h(ξ,ξ) = {self_pairing}"),
        );
        rec.record(
            format!("{btag}: h(ξ,ξ) < 0"),
            "Eq. (2)",
            self_pairing.sign_of_real() == -1,
            "",
        );

        // T on the eigenspace is the complex reflection; compare T·P with
        // R·P so the equality is an identity of operators on im(P_λ).
        let scale = ctx.normalization_scale(&xi);
        // Unnormalized proof form v ↦ v + (λ̄−1)·h(v,ξ)/h(ξ,ξ)·ξ: the same
        // matrix as the μ = λ̄ reflection with scale −1/h(ξ,ξ).
        let inv_self = self_pairing.inv().expect("h(ξ,ξ) ≠ 0");
        let refl_unnorm = {
            let n = ctx.rank();
            let xi_bar: Vec<Cyclotomic> = xi.coords.iter().map(Scalar::conjugate).collect();
            let h_basis = ctx.gram.mul_vec(&xi_bar);
            Matrix::from_fn(n, n, |i, j| {
                let diag = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                diag + (lambda_bar.clone() - Cyclotomic::one())
                    * inv_self.clone()
                    * h_basis[j].clone()
                    * xi.coords[i].clone()
            })
        };
        let refl_norm = ctx.reflection(&lambda_bar, &scale, &xi.coords);
        rec.record(
            format!("{btag}: T|_λ = v ↦ v + (λ̄−1)·h(v,ξ)/h(ξ,ξ)·ξ"),
            "Prop \"reflection\"",
            t.mul(&p) == refl_unnorm.mul(&p),
            "",
        );
        rec.record(
            format!("{btag}: normalized reflection (h(η,η) = −1) agrees"),
            "Prop \"reflection\"",
            refl_norm == refl_unnorm,
            "",
        );
        rec.record(
            format!("{btag}: T·ξ = λ̄·ξ"),
            "Prop \"reflection\"",
            t.mul_vec(&xi.coords) == scale_vec(&xi.coords, &lambda_bar),
            "",
        );
        // The statement's convention realizes λ on T⁻¹:
        // T⁻¹|_λ = x ↦ x − (λ−1)·h(x,η)·η.
        let t_inv = t.inverse().expect("lattice monodromy is invertible");
        let refl_stmt = ctx.reflection(&lambda, &scale, &xi.coords);
        rec.record(
            format!("{btag}: T⁻¹|_λ = x ↦ x − (λ−1)·h(x,η)·η"),
            "Prop \"reflection\"",
            t_inv.mul(&p) == refl_stmt.mul(&p),
            "",
        );
        // Reflection fixes the h-orthogonal complement of ξ inside the
        // eigenspace: project each basis vector, subtract the ξ-component,
        // and check T fixes what is left.
        let mut fixed_ok = true;
        let mut nontrivial = 0usize;
        for j in 0..ctx.rank() {
            let v = p.column(j);
            let coeff = ctx.h(&v, &xi.coords) * inv_self.clone();
            let v_perp = sub_vec(&v, &scale_vec(&xi.coords, &coeff));
            if is_zero_vec(&v_perp) {
                continue;
            }
            nontrivial += 1;
            if t.mul_vec(&v_perp) != v_perp {
                fixed_ok = false;
            }
        }
        rec.record(
            format!("{btag}: T fixes the h-orthogonal complement of ξ in the eigenspace"),
            "Prop \"reflection\"",
            fixed_ok,
            if nontrivial == 0 {
                "orthogonal complement of ξ in the eigenspace is trivial".to_string()
            } else {
                format!("{nontrivial} nonzero orthogonal vectors checked")
            },
        );
        // Gauge invariance: replacing ξ by u·ξ (any unit u) leaves the
        // reflection matrix unchanged, because h(·, uξ)·uξ = h(·,ξ)·ξ·uū.
        let gauge = Cyclotomic::root_of_unity(ctx.k, 1);
        let gauged = ctx.reflection(&lambda, &scale, &scale_vec(&xi.coords, &gauge));
        rec.record(
            format!("{btag}: reflection is gauge-invariant (η ↦ ζ_k·η)"),
            "Prop \"reflection\"",
            gauged == refl_stmt,
            "",
        );
    }

    match rec.first_failure() {
        Some(fail) => Err(EigenError::VerificationFailed {
            identity: fail.name.clone(),
            witness: fail.witness.clone().unwrap_or_default(),
        }),
        None => Ok(rec),
    }
}

/// Verifies the pairing table and the monodromy formulas on the cusp lattice
/// for every `λ = ζ_k^p ≠ 1`, plus the disjoint (h-orthogonal) model:
///
/// * `h(ξ_α, ξ_β) = (1−λ)/k`, hence `h(η_α, η_β) = 1/(1−λ̄)` before gauging
///   (the proof's display) and `= 1/(1−λ)` after the gauge `η_β ↦ −λ·η_β`
///   (the statement's convention — the discrepancy is recorded, not hidden);
/// * `T_β(η_β) = λη_β`, `T_β(η_α) = η_α + η_β`, `T_α(η_β) = η_β − λη_α`,
///   with the reflections anchored to the lattice monodromies via
///   `R = (T|_λ)⁻¹`;
/// * on the disjoint model, `h(η_α, η_β) = 0` and `T_β(η_α) = η_α`.
pub fn verify_pairing_table(k: u64) -> Result<VerificationRecord, EigenError> {
    let mut rec = VerificationRecord::new();
    let one = Cyclotomic::one();
    for p in 1..k {
        let ctx = EigenContext::cusp(k, p)?;
        let tag = ctx.label();
        let lambda = ctx.lambda.clone();
        let lambda_bar = lambda.conjugate();
        let proj = projector(&ctx);
        let xi_a = xi_class(&ctx, Branch::Alpha)?;
        let xi_b = xi_class(&ctx, Branch::Beta)?;

        let cross = ctx.h(&xi_a.coords, &xi_b.coords);
        let predicted_cross = (one.clone() - lambda.clone()).div_nat(k);
        rec.record(
            format!("{tag}: h(ξ_α, ξ_β) = (1−λ)/k"),
            "Prop \"alphabeta\"",
            cross == predicted_cross,
            format!("h(ξ_α,ξ_β) = {cross}"),
        );
        rec.record(
            format!("{tag}: h(ξ_α,ξ_α) = h(ξ_β,ξ_β)"),
            "Eq. (2)",
            ctx.h(&xi_a.coords, &xi_a.coords) == ctx.h(&xi_b.coords, &xi_b.coords),
            "",
        );

        // Normalized pairing before any gauge: c·h(ξ_α,ξ_β) = 1/(1−λ̄) —
        // the proof's final display, under the statement's 1/(1−λ). The
        // difference is exactly the unit −λ, recorded below.
        let scale = ctx.normalization_scale(&xi_a);
        let ungauged = scale.clone() * cross.clone();
        let proof_value = (one.clone() - lambda_bar.clone()).inv().expect("λ ≠ 1");
        rec.record(
            format!("{tag}: ungauged h(η_α,η_β) = 1/(1−λ̄) (proof display)"),
            "Prop \"alphabeta\"",
            ungauged == proof_value,
            format!("h(η_α,η_β) = {ungauged} before gauging"),
        );

        // Gauge search: u ranges over ±ζ_k^j, −λ first (the unit that works).
        let statement_value = (one.clone() - lambda.clone()).inv().expect("λ ≠ 1");
        let mut candidates = vec![-lambda.clone()];
        for j in 0..k {
            let z = Cyclotomic::root_of_unity(k, j);
            candidates.push(z.clone());
            candidates.push(-z);
        }
        let gauge = candidates
            .into_iter()
            .find(|u| u.conjugate() * ungauged.clone() == statement_value)
            .ok_or(EigenError::GaugeImpossible { k, p })?;
        rec.record(
            format!("{tag}: gauge u = −λ makes h(η_α, u·η_β) = 1/(1−λ)"),
            "Prop \"alphabeta\"",
            gauge == -lambda.clone(),
            format!("u = {gauge}"),
        );

        // Work with representatives η_α := ξ_α, η_β := u·ξ_β; the common
        // normalization scalar s (with s·s̄ = −h(ξ,ξ)) cancels from every
        // formula below, so the identities can be checked on ξ-level
        // vectors with the scale c = −1/h(ξ,ξ) folded into the reflections.
        let eta_a = xi_a.coords.clone();
        let eta_b = scale_vec(&xi_b.coords, &gauge);
        let r_alpha = ctx.reflection(&lambda, &scale, &eta_a);
        let r_beta = ctx.reflection(&lambda, &scale, &eta_b);

        rec.record(
            format!("{tag}: T_β(η_β) = λ·η_β"),
            "Corollary \"monformula\"",
            r_beta.mul_vec(&eta_b) == scale_vec(&eta_b, &lambda),
            "",
        );
        rec.record(
            format!("{tag}: T_β(η_α) = η_α + η_β"),
            "Corollary \"monformula\"",
            r_beta.mul_vec(&eta_a) == add_vec(&eta_a, &eta_b),
            "",
        );
        rec.record(
            format!("{tag}: T_α(η_β) = η_β − λ·η_α"),
            "Corollary \"monformula\"",
            r_alpha.mul_vec(&eta_b) == sub_vec(&eta_b, &scale_vec(&eta_a, &lambda)),
            "",
        );
        // Anchor the reflections to the lattice monodromies: on the
        // eigenspace, R_α = (T_α|_λ)⁻¹ and R_β = (T_β|_λ)⁻¹ (the statement's
        // formulas realize λ, the lattice monodromy realizes λ̄).
        let t_alpha = ctx.monodromy(Branch::Alpha);
        let t_beta = ctx.monodromy(Branch::Beta);
        rec.record(
            format!("{tag}: R_α = (T_α|_λ)⁻¹ on the eigenspace"),
            "Prop \"reflection\"",
            t_alpha.mul(&r_alpha).mul(&proj) == proj,
            "",
        );
        rec.record(
            format!("{tag}: R_β = (T_β|_λ)⁻¹ on the eigenspace"),
            "Prop \"reflection\"",
            t_beta.mul(&r_beta).mul(&proj) == proj,
            "",
        );

        // Disjoint-support model: two h-orthogonal blocks.
        let dctx = EigenContext::disjoint(k, p)?;
        let dtag = dctx.label();
        let dxi_a = xi_class(&dctx, Branch::Alpha)?;
        let dxi_b = xi_class(&dctx, Branch::Beta)?;
        rec.record(
            format!("{dtag}: h(η_α, η_β) = 0"),
            "Prop \"alphabeta\"",
            Scalar::is_zero(&dctx.h(&dxi_a.coords, &dxi_b.coords)),
            "",
        );
        rec.record(
            format!("{dtag}: T_β(η_α) = η_α"),
            "Corollary \"monformula\"",
            dctx.monodromy(Branch::Beta).mul_vec(&dxi_a.coords) == dxi_a.coords,
            "",
        );
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    fn cyc(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rat(n, d))
    }

    #[test]
    fn k2_node_is_the_rank_one_picture() {
        // σ = [−1], P_λ = (1/2)(I − σ) = [1], ξ = δ_1, h(ξ,ξ) = −2.
        let ctx = EigenContext::node(2, 1).unwrap();
        let p = projector(&ctx);
        assert_eq!(p, Matrix::identity(1));
        let xi = xi_class(&ctx, Branch::Alpha).unwrap();
        assert_eq!(xi.coords, vec![Cyclotomic::one()]);
        assert_eq!(ctx.h(&xi.coords, &xi.coords), cyc(-2, 1));
    }

    #[test]
    fn k4_node_projector_has_rank_one_and_half_pairing() {
        let ctx = EigenContext::node(4, 1).unwrap();
        let p = projector(&ctx);
        assert_eq!(p.rank(), 1);
        let xi = xi_class(&ctx, Branch::Alpha).unwrap();
        // h(ξ,ξ) = (1/4)(1−i)(−i−1) = −1/2.
        assert_eq!(ctx.h(&xi.coords, &xi.coords), cyc(-1, 2));
    }

    #[test]
    fn k3_cusp_cross_pairing_matches() {
        let ctx = EigenContext::cusp(3, 1).unwrap();
        let xi_a = xi_class(&ctx, Branch::Alpha).unwrap();
        let xi_b = xi_class(&ctx, Branch::Beta).unwrap();
        let expected = (Cyclotomic::one() - Cyclotomic::zeta(3)).div_nat(3);
        assert_eq!(ctx.h(&xi_a.coords, &xi_b.coords), expected);
    }

    #[test]
    fn self_pairing_formula_holds_on_a_grid() {
        for k in 2..=6u64 {
            for p in 1..k {
                for ctx in [EigenContext::node(k, p).unwrap(), EigenContext::cusp(k, p).unwrap()] {
                    let xi = xi_class(&ctx, Branch::Alpha).unwrap();
                    let h = ctx.h(&xi.coords, &xi.coords);
                    assert_eq!(h, predicted_self_pairing(&ctx), "{}", ctx.label());
                    assert_eq!(h.sign_of_real(), -1, "{}", ctx.label());
                }
            }
        }
    }

    #[test]
    fn reflection_suite_passes_on_samples() {
        for ctx in [
            EigenContext::node(5, 2).unwrap(),
            EigenContext::cusp(4, 3).unwrap(),
            EigenContext::disjoint(3, 1).unwrap(),
        ] {
            let rec = verify_reflection(&ctx).unwrap();
            assert!(rec.passed());
            assert!(rec.checks.len() >= 10, "{}", ctx.label());
        }
    }

    #[test]
    fn pairing_table_passes_for_small_k() {
        for k in 2..=5 {
            let rec = verify_pairing_table(k).unwrap();
            assert!(rec.passed(), "k = {k}");
        }
    }

    #[test]
    fn degenerate_and_mismatched_inputs_are_rejected() {
        assert_eq!(EigenContext::node(3, 0).unwrap_err(), EigenError::DegenerateLambda);
        assert_eq!(EigenContext::node(3, 3).unwrap_err(), EigenError::DegenerateLambda);
        let ctx = EigenContext::node(4, 1).unwrap();
        let short = vec![Cyclotomic::one()];
        assert_eq!(
            hermitian(&ctx, &short, &short).unwrap_err(),
            EigenError::DimensionMismatch { expected: 3, found: 1 }
        );
        // A basis vector is not an eigenvector for k ≥ 3.
        let e0: Vec<Cyclotomic> = projector(&ctx).column(0); // this IS one
        assert!(ctx.eigenvector(e0).is_ok());
        let mut not_eigen = vec![Cyclotomic::zero(); 3];
        not_eigen[0] = Cyclotomic::one();
        assert!(matches!(
            ctx.eigenvector(not_eigen),
            Err(EigenError::VerificationFailed { .. })
        ));
    }

    #[test]
    fn with_lambda_validates_the_root() {
        let a3 = build_ak_lattice(4).unwrap();
        let ok = EigenContext::with_lambda(a3.clone(), Cyclotomic::zeta(4)).unwrap();
        assert_eq!(ok.p, 1);
        assert_eq!(
            EigenContext::with_lambda(a3, Cyclotomic::zeta(8)).unwrap_err(),
            EigenError::NotRootOfUnity { k: 4 }
        );
    }

    #[test]
    #[should_panic(expected = "single branch")]
    fn beta_requires_a_second_branch() {
        let ctx = EigenContext::node(3, 1).unwrap();
        let _ = xi_class(&ctx, Branch::Beta);
    }
}
