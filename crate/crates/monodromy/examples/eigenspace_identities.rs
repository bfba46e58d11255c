//! Complex reflections on the λ-eigenspace of the deck transformation.
//!
//! Over `Q(ζ_k)` the deck map `σ` of a Milnor lattice diagonalizes, and the
//! projector `P_λ = (1/k) Σ λ̄^i σ^i` picks out the `λ = ζ_k^p` eigenspace.
//! On that eigenspace the lattice monodromy restricts to a complex reflection
//!
//! ```text
//! v ↦ v + (λ̄ − 1) · h(v, ξ)/h(ξ, ξ) · ξ,      ξ = P_λ(δ_1),
//! ```
//!
//! where `h(x, y) = (x, ȳ)` is the Hermitian form induced by the intersection
//! pairing. The self-pairing `h(ξ, ξ) = (1/k)(1 − λ)(λ̄ − 1)` is a negative
//! real number, so the reflection is unitary with respect to a form of the
//! right signature. [`verify_reflection`] checks the full list of identities
//! on the node, cusp, and disjoint contexts; this example runs it at one
//! `(k, p)` and prints the per-identity outcomes with their witnesses.
//!
//! Run with: `cargo run --example eigenspace_identities`

use monodromy::eigenspace::{hermitian, verify_reflection, xi_class, Branch, EigenContext};

fn main() {
    let (k, p) = (5u64, 2u64);

    for ctx in [
        EigenContext::node(k, p).expect("valid (k, p)"),
        EigenContext::cusp(k, p).expect("valid (k, p)"),
        EigenContext::disjoint(k, p).expect("valid (k, p)"),
    ] {
        println!("context: {}", ctx.label());

        // The anchor values, printed exactly as cyclotomic numbers.
        let xi = xi_class(&ctx, Branch::Alpha).expect("α exists everywhere");
        let self_pairing = hermitian(&ctx, &xi.coords, &xi.coords).expect("rank matches");
        println!("  h(ξ_α, ξ_α) = {self_pairing}");
        if ctx.branches().contains(&Branch::Beta) {
            let xi_beta = xi_class(&ctx, Branch::Beta).expect("β exists here");
            let cross = hermitian(&ctx, &xi.coords, &xi_beta.coords).expect("rank matches");
            println!("  h(ξ_α, ξ_β) = {cross}");
        }

        // The full identity battery for this context.
        let record = verify_reflection(&ctx).expect("identities hold");
        for check in &record.checks {
            let witness = check.witness.as_deref().unwrap_or("");
            if witness.is_empty() {
                println!("  [{}] {}", check.status, check.name);
            } else {
                println!("  [{}] {} — {}", check.status, check.name, witness);
            }
        }
        assert!(record.passed());
        println!();
    }
}
