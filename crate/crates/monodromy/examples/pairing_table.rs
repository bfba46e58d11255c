//! The normalized pairing table on the cusp lattice's λ-eigenspace.
//!
//! On the cusp lattice each branch contributes a generator `ξ_α`, `ξ_β` of
//! the `λ`-eigenspace. After implicit normalization to unit vectors `η_α`,
//! `η_β` with `h(η, η) = −1` and a phase gauge `η_β ↦ ±ζ^j·η_β`, the pairing
//! and the branch monodromies take the rigid normal form
//!
//! ```text
//! h(η_α, η_β) = 1/(1 − λ),
//! T_β(η_β) = λ·η_β,    T_β(η_α) = η_α + η_β,    T_α(η_β) = η_β − λ·η_α.
//! ```
//!
//! `verify_pairing_table(k)` confirms this for every eigenvalue exponent
//! `p = 1, …, k−1` at once; this example prints the raw pairings for one `k`
//! and then the table verdicts.
//!
//! Run with: `cargo run --example pairing_table`

use monodromy::eigenspace::{hermitian, verify_pairing_table, xi_class, Branch, EigenContext};

fn main() {
    let k = 6u64;

    println!("raw cross-pairings h(ξ_α, ξ_β) on the cusp lattice, k = {k}:");
    for p in 1..k {
        let ctx = EigenContext::cusp(k, p).expect("valid (k, p)");
        let xi_a = xi_class(&ctx, Branch::Alpha).expect("α branch");
        let xi_b = xi_class(&ctx, Branch::Beta).expect("β branch");
        let cross = hermitian(&ctx, &xi_a.coords, &xi_b.coords).expect("rank matches");
        println!("  p = {p}: h(ξ_α, ξ_β) = {cross}   (predicted (1−λ)/k)");
    }

    println!("\nnormalized table, all p at once:");
    let record = verify_pairing_table(k).expect("table holds");
    for check in &record.checks {
        let witness = check.witness.as_deref().unwrap_or("");
        if witness.is_empty() {
            println!("  [{}] {}", check.status, check.name);
        } else {
            println!("  [{}] {} — {}", check.status, check.name, witness);
        }
    }
    assert!(record.passed());
}
