//! The Milnor lattice of the node singularity `x² + yᵏ`.
//!
//! The `k`-fold cyclic cover of the disk branched at the singular point has
//! Milnor lattice `A_{k−1}`: a chain of `k − 1` vanishing cycles `δ_1, …,
//! δ_{k−1}` with
//!
//! ```text
//! (δ_i, δ_i) = −2,    (δ_i, δ_{i+1}) = 1,    (δ_i, δ_j) = 0 otherwise.
//! ```
//!
//! The deck transformation `σ` cyclically rotates the cycles and has exact
//! order `k`; the total monodromy `T = T_{δ_{k−1}} ⋯ T_{δ_1}` (a Coxeter
//! element) also has exact order `k` and sends `δ_1` to `−Σδ_j`, the negative
//! of the completed cycle.
//!
//! Run with: `cargo run --example ak_lattice`

use monodromy::lattice::{build_ak_lattice, coxeter_monodromy, deck_map, twist_basis};
use monodromy::matrix::IntMatrix;

/// Smallest `n ≥ 1` with `mᵑ = 1` (all the maps here have finite order).
fn exact_order(m: &IntMatrix) -> u64 {
    let mut power = m.clone();
    let mut order = 1;
    while !power.is_identity() {
        power = power.mul(m);
        order += 1;
    }
    order
}

fn main() {
    for k in [2u64, 3, 5, 8] {
        let lattice = build_ak_lattice(k).expect("k ≥ 2");
        println!("k = {k}: A_{} lattice, rank {}", k - 1, lattice.rank);
        println!("  basis: {}", lattice.basis_labels.join(", "));
        for i in 0..lattice.rank {
            let row: Vec<String> =
                (0..lattice.rank).map(|j| lattice.gram.get(i, j).to_string()).collect();
            println!("  gram[{i}] = [{}]", row.join(", "));
        }

        // The deck map and the Coxeter-style twist product are both
        // isometries of exact order k.
        let sigma = deck_map(&lattice).expect("node shape");
        let coxeter = coxeter_monodromy(&lattice).expect("node shape");
        println!("  deck map σ: exact order {}", exact_order(&sigma.matrix));
        println!(
            "  twist product T = T_(δ_{{k−1}})⋯T_(δ_1): exact order {}",
            exact_order(&coxeter.matrix)
        );

        // T sends δ_1 to the negative of the completed cycle −Σ δ_j.
        let image = coxeter.apply(&lattice.basis_vector(0));
        println!("  T(δ_1) = {image:?}  (= −Σ δ_j)");
        assert!(image.iter().all(|&c| c == -1));

        // Each basis twist is a Picard–Lefschetz involution.
        let t1 = twist_basis(&lattice, 0).expect("valid index");
        assert!(t1.matrix.mul(&t1.matrix).is_identity());
        println!("  T_(δ_1)² = 1\n");
    }
}
