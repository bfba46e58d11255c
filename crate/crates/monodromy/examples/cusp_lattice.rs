//! The Milnor lattice of the cusp suspension: two interleaved `A_{k−1}`
//! chains.
//!
//! Pulling the two branches of a cusp apart and passing to the `k`-fold
//! cyclic cover produces twice `k − 1` vanishing cycles `δ_{α,i}`, `δ_{β,i}`.
//! Each chain is a copy of `A_{k−1}`; across the chains the plumbing
//! prescribes
//!
//! ```text
//! (δ_{α,i}, δ_{β,i}) = 1,    (δ_{α,i}, δ_{β,i+1}) = −1,
//! ```
//!
//! and all other cross-pairings vanish. The deck transformation acts by the
//! same cyclic rule on both chains at once, and each branch carries its own
//! monodromy `T_α`, `T_β` — the product of the twists along that chain, which
//! still moves the *other* chain because the chains pair nontrivially.
//!
//! Run with: `cargo run --example cusp_lattice`

use monodromy::lattice::{branch_monodromies, build_cusp_lattice, deck_map};

fn main() {
    let k = 4u64;
    let lattice = build_cusp_lattice(k).expect("k ≥ 2");
    println!("k = {k}: cusp lattice, rank {}", lattice.rank);
    println!("basis: {}", lattice.basis_labels.join(", "));
    println!("gram matrix:");
    for i in 0..lattice.rank {
        let row: Vec<String> =
            (0..lattice.rank).map(|j| format!("{:>2}", lattice.gram.get(i, j))).collect();
        println!("  [{}]", row.join(" "));
    }

    // The deck map shifts both chains simultaneously and has exact order k.
    let sigma = deck_map(&lattice).expect("cusp shape");
    let mut power = sigma.matrix.clone();
    let mut order = 1;
    while !power.is_identity() {
        power = power.mul(&sigma.matrix);
        order += 1;
    }
    println!("\ndeck map σ: exact order {order}");

    // Branch monodromies: isometries that do not fix the other chain.
    let (t_alpha, t_beta) = branch_monodromies(&lattice).expect("cusp shape");
    let n = (k - 1) as usize;
    let beta_1 = lattice.basis_vector(n); // δ_{β,1}
    println!("T_α(δ_β,1) = {:?}  (the chains interact)", t_alpha.apply(&beta_1));
    println!("T_β(δ_β,1) = {:?}", t_beta.apply(&beta_1));

    // Both are isometries of the pairing — LatticeEndo::isometry checked
    // that on construction; re-state it explicitly for the record.
    for (name, endo) in [("T_α", &t_alpha), ("T_β", &t_beta)] {
        let transported = endo.matrix.transpose().mul(&lattice.gram).mul(&endo.matrix);
        assert_eq!(transported, lattice.gram);
        println!("{name} preserves the intersection form");
    }
}
