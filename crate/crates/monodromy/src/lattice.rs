//! Milnor lattices of the branched-cover singularities and their standard
//! automorphisms.
//!
//! Two lattices are built here, both carried by distinguished bases of
//! vanishing cycles with self-pairing `(δ,δ) = −2`:
//!
//! * the **node** lattice of `x² + y^k` — the `A_{k−1}` chain `δ_1, …,
//!   δ_{k−1}` with `(δ_i, δ_{i+1}) = 1`;
//! * the **cusp suspension** lattice of `x² + y³ + z^k` — two chains
//!   `δ_{α,i}`, `δ_{β,i}` with the cross pairings `(δ_{α,i}, δ_{β,i}) = 1`
//!   and `(δ_{α,i}, δ_{β,i+1}) = −1` (the gram is symmetrized from this
//!   one-sided list).
//!
//! The deck transformation of the `k`-fold cover acts by `σ(δ_i) = δ_{i+1}`
//! with `δ_k := −δ_1 − ⋯ − δ_{k−1}`, blockwise in the cusp case. Each
//! vanishing class `c` gives a Picard–Lefschetz twist `T_c(x) = x + (x,c)c`,
//! and the nodal monodromy is the Coxeter-style product `T = T_{δ_{k−1}} ⋯
//! T_{δ_1}` (rightmost factor applied first — this convention is pinned by
//! the closed form below and used for every product in the crate).
//! [`coxeter_monodromy`] computes `T` twice — as the composed product and by
//! the closed form `T(v) = v + Σ_i (v, δ_1 + ⋯ + δ_i) δ_i` — and insists the
//! two agree.

use thiserror::Error;

use crate::matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// The covering degree must be at least 2.
    #[error("covering degree k must be ≥ 2, got {k}")]
    InvalidDegree { k: u64 },
    /// The lattice's basis labels match neither the node nor the cusp shape.
    #[error("unsupported lattice: basis labels match neither the node nor the cusp shape")]
    UnsupportedLattice,
    /// A twist was requested around a class with `(c,c) ≠ −2`.
    #[error("not a vanishing class: self-pairing is {found}, expected -2")]
    NotAVanishingClass { found: i64 },
    /// The composed twist product disagrees with the closed form — an
    /// implementation fault, loudly reported.
    #[error("composed twists disagree with the closed form on basis vector {basis_index}")]
    ClosedFormMismatch { basis_index: usize },
}

/// Which of the two recognized lattice shapes a [`MilnorLattice`] has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeShape {
    Node,
    Cusp,
}

/// A Milnor lattice: an integer intersection form on a distinguished basis
/// of vanishing cycles, together with the covering degree `k` it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct MilnorLattice {
    pub k: u64,
    pub rank: usize,
    /// The symmetric pairing `(·,·)` in the distinguished basis.
    pub gram: IntMatrix,
    pub basis_labels: Vec<String>,
}

impl MilnorLattice {
    /// Builds a lattice from parts, checking the vanishing-cycle invariants:
    /// symmetric gram, all diagonal entries −2, entries in {−2,−1,0,1}.
    pub fn from_parts(k: u64, gram: IntMatrix, basis_labels: Vec<String>) -> Self {
        let rank = gram.size();
        assert_eq!(basis_labels.len(), rank, "label count must match rank");
        for i in 0..rank {
            assert_eq!(gram.get(i, i), -2, "diagonal of a vanishing-cycle gram is -2");
            for j in 0..rank {
                assert_eq!(gram.get(i, j), gram.get(j, i), "gram must be symmetric");
                assert!((-2..=1).contains(&gram.get(i, j)), "gram entries lie in -2..=1");
            }
        }
        MilnorLattice { k, rank, gram, basis_labels }
    }

    /// The pairing `(x, y) = xᵀ·gram·y`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        assert_eq!(x.len(), self.rank, "vector length must match rank");
        assert_eq!(y.len(), self.rank, "vector length must match rank");
        let gy = self.gram.mul_vec(y);
        x.iter().zip(gy.iter()).map(|(a, b)| a * b).sum()
    }

    /// The `i`-th basis vector as coordinates.
    pub fn basis_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    /// Which recognized shape this lattice has, judged by its basis labels.
    pub fn shape(&self) -> Option<LatticeShape> {
        if self.basis_labels == node_labels(self.k) {
            Some(LatticeShape::Node)
        } else if self.basis_labels == cusp_labels(self.k) {
            Some(LatticeShape::Cusp)
        } else {
            None
        }
    }
}

/// An isometry of a Milnor lattice, acting on column coordinate vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEndo {
    pub matrix: IntMatrix,
}

impl LatticeEndo {
    /// Wraps a matrix, insisting it preserve the gram pairing
    /// (`Mᵀ·gram·M = gram`); every map this module produces is an isometry,
    /// so a violation is an implementation fault.
    pub fn isometry(lattice: &MilnorLattice, matrix: IntMatrix) -> Self {
        let transported = matrix.transpose().mul(&lattice.gram).mul(&matrix);
        assert_eq!(transported, lattice.gram, "endomorphism must preserve the pairing");
        LatticeEndo { matrix }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix.mul_vec(v)
    }
}

fn node_labels(k: u64) -> Vec<String> {
    (1..k).map(|i| format!("δ_{i}")).collect()
}

fn cusp_labels(k: u64) -> Vec<String> {
    let alpha = (1..k).map(|i| format!("δ_α,{i}"));
    let beta = (1..k).map(|i| format!("δ_β,{i}"));
    alpha.chain(beta).collect()
}

/// The `A_{k−1}` node lattice: rank `k−1`, gram `−2` on the diagonal and `1`
/// between neighbors in the chain.
pub fn build_ak_lattice(k: u64) -> Result<MilnorLattice, LatticeError> {
    if k < 2 {
        return Err(LatticeError::InvalidDegree { k });
    }
    let n = (k - 1) as usize;
    let gram = IntMatrix::from_fn(n, |i, j| {
        if i == j {
            -2
        } else if i.abs_diff(j) == 1 {
            1
        } else {
            0
        }
    });
    Ok(MilnorLattice::from_parts(k, gram, node_labels(k)))
}

/// The cusp-suspension lattice: two `A_{k−1}` chains `δ_{α,·}`, `δ_{β,·}`
/// with cross pairings `(δ_{α,i}, δ_{β,i}) = 1` and `(δ_{α,i}, δ_{β,i+1}) =
/// −1`, symmetrized.
pub fn build_cusp_lattice(k: u64) -> Result<MilnorLattice, LatticeError> {
    if k < 2 {
        return Err(LatticeError::InvalidDegree { k });
    }
    let n = (k - 1) as usize;
    let mut gram = IntMatrix::zeros(2 * n);
    let a = |i: usize| i - 1; // δ_{α,i}, i = 1..k−1
    let b = |i: usize| n + i - 1; // δ_{β,i}
    for i in 1..=n {
        gram.set(a(i), a(i), -2);
        gram.set(b(i), b(i), -2);
        if i + 1 <= n {
            gram.set(a(i), a(i + 1), 1);
            gram.set(b(i), b(i + 1), 1);
            gram.set(a(i), b(i + 1), -1);
        }
        gram.set(a(i), b(i), 1);
    }
    // Symmetrize the one-sided list.
    let sym = IntMatrix::from_fn(2 * n, |i, j| {
        if i == j {
            gram.get(i, j)
        } else {
            gram.get(i, j) + gram.get(j, i)
        }
    });
    Ok(MilnorLattice::from_parts(k, sym, cusp_labels(k)))
}

/// The matrix of `σ(δ_i) = δ_{i+1}`, `σ(δ_{k−1}) = δ_k := −Σ_j δ_j` on one
/// `A_{k−1}` block.
fn node_sigma_block(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| {
        if j == n - 1 {
            -1
        } else if i == j + 1 {
            1
        } else {
            0
        }
    })
}

/// The deck transformation `σ` of the `k`-fold cover: the cyclic shift on
/// the node basis, acting blockwise (same rule on the α- and β-chains) in
/// the cusp case. Satisfies `σ^k = 1`.
pub fn deck_map(lattice: &MilnorLattice) -> Result<LatticeEndo, LatticeError> {
    let n = (lattice.k - 1) as usize;
    let block = node_sigma_block(n);
    let matrix = match lattice.shape() {
        Some(LatticeShape::Node) => block,
        Some(LatticeShape::Cusp) => IntMatrix::from_fn(2 * n, |i, j| {
            if i < n && j < n {
                block.get(i, j)
            } else if i >= n && j >= n {
                block.get(i - n, j - n)
            } else {
                0
            }
        }),
        None => return Err(LatticeError::UnsupportedLattice),
    };
    Ok(LatticeEndo::isometry(lattice, matrix))
}

/// The Picard–Lefschetz twist `T_c(x) = x + (x,c)·c` around a vanishing
/// class `c` (which must satisfy `(c,c) = −2`).
pub fn twist(lattice: &MilnorLattice, c: &[i64]) -> Result<LatticeEndo, LatticeError> {
    let self_pairing = lattice.pairing(c, c);
    if self_pairing != -2 {
        return Err(LatticeError::NotAVanishingClass { found: self_pairing });
    }
    let n = lattice.rank;
    let mut matrix = IntMatrix::identity(n);
    for j in 0..n {
        let coeff = lattice.pairing(&lattice.basis_vector(j), c);
        for i in 0..n {
            matrix.set(i, j, matrix.get(i, j) + coeff * c[i]);
        }
    }
    Ok(LatticeEndo::isometry(lattice, matrix))
}

/// Twist around the `i`-th basis vector.
pub fn twist_basis(lattice: &MilnorLattice, i: usize) -> Result<LatticeEndo, LatticeError> {
    twist(lattice, &lattice.basis_vector(i))
}

/// Product of the twists around `basis_indices`, with the first listed index
/// applied first (so the returned matrix is `T_last ⋯ T_first`).
pub fn twist_product(
    lattice: &MilnorLattice,
    basis_indices: impl IntoIterator<Item = usize>,
) -> Result<LatticeEndo, LatticeError> {
    let mut acc = IntMatrix::identity(lattice.rank);
    for i in basis_indices {
        acc = twist_basis(lattice, i)?.matrix.mul(&acc);
    }
    Ok(LatticeEndo::isometry(lattice, acc))
}

/// The nodal monodromy `T = T_{δ_{k−1}} ⋯ T_{δ_1}` of the `A_{k−1}` lattice
/// (`T_{δ_1}` applied first), cross-checked against the closed form
/// `T(v) = v + Σ_{i=1}^{k−1} (v, δ_1 + ⋯ + δ_i)·δ_i`.
pub fn coxeter_monodromy(lattice: &MilnorLattice) -> Result<LatticeEndo, LatticeError> {
    if lattice.shape() != Some(LatticeShape::Node) {
        return Err(LatticeError::UnsupportedLattice);
    }
    let n = lattice.rank;
    let composed = twist_product(lattice, 0..n)?;

    // Closed form, column by column.
    let mut closed = IntMatrix::identity(n);
    for j in 0..n {
        let e_j = lattice.basis_vector(j);
        let mut partial = vec![0i64; n]; // δ_1 + … + δ_i as i grows
        for i in 0..n {
            partial[i] += 1;
            let coeff = lattice.pairing(&e_j, &partial);
            closed.set(i, j, closed.get(i, j) + coeff);
        }
    }
    for j in 0..n {
        if composed.matrix.column(j) != closed.column(j) {
            return Err(LatticeError::ClosedFormMismatch { basis_index: j });
        }
    }
    Ok(composed)
}

/// The per-branch monodromies `T_α`, `T_β` of the cusp lattice: the product
/// of the twists along each chain (first chain vector applied first). Note
/// they act on the whole lattice — the chains pair nontrivially.
pub fn branch_monodromies(
    lattice: &MilnorLattice,
) -> Result<(LatticeEndo, LatticeEndo), LatticeError> {
    if lattice.shape() != Some(LatticeShape::Cusp) {
        return Err(LatticeError::UnsupportedLattice);
    }
    let n = (lattice.k - 1) as usize;
    let t_alpha = twist_product(lattice, 0..n)?;
    let t_beta = twist_product(lattice, n..2 * n)?;
    Ok((t_alpha, t_beta))
}
