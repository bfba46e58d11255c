//! The element `W` over `Z[λ, λ⁻¹]` and the quadratic factor of its
//! characteristic polynomial.
//!
//! Six reflections `M_0, …, M_5` arranged along an `E_6`-shaped tree generate
//! a unitary reflection representation of a braid-like group over the Laurent
//! ring `Z[λ, λ⁻¹]`. The element
//!
//! ```text
//! W = (M_0 M_0′ M_0)(M_0′ M_0 M_0′)⁻¹ = M_0 M_0′ M_0 M_0′⁻¹ M_0⁻¹ M_0′⁻¹,
//! M_0′ = B · M_0 · B⁻¹,   B = M_3 M_2 M_4 M_3 M_1 M_5 M_2 M_4 M_3,
//! ```
//!
//! measures the failure of the braid relation between `M_0` and `M_0′`; its
//! characteristic polynomial factors as
//!
//! ```text
//! char(W)(x) = (x − 1)⁴ · (x² + P(λ)·x + 1)
//! ```
//!
//! for a single bar-invariant Laurent polynomial `P`. This example computes
//! `P` symbolically, prints its coefficients and cosine form, and runs the
//! full symbolic verification battery (braid relations, h-unitarity,
//! determinants, the factorization, gauge invariance).
//!
//! Run with: `cargo run --example wajnryb_symbolic` (release profile
//! recommended; the symbolic characteristic polynomial is the slow step)

use monodromy::wajnryb::{reference_p, symbolic_p, verify_symbolic};

fn main() {
    // The golden value, stated once in the crate and re-derived here.
    let p = symbolic_p().expect("factorization exists");
    assert_eq!(p, reference_p());
    println!("P(λ) = {p}");
    println!("bar-invariant (λ ↦ λ⁻¹ symmetric): {}", p.is_bar_invariant());

    let cosines = p.cosine_coefficients().expect("bar-invariant");
    let rendered: Vec<String> = cosines
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| format!("{c}·2cos({j}θ)"))
        .collect();
    println!("on |λ| = 1:  P(e^(iθ)) = {} + {}", cosines[0], rendered.join(" + "));

    // Spot values at the honest specializations.
    for (q, pp, label) in [(1u64, 0u64, "λ = 1"), (4, 1, "λ = i"), (3, 1, "λ = ζ_3")] {
        println!("  {label}: P = {}", p.eval_root_of_unity(q, pp));
    }

    println!("\nsymbolic verification battery:");
    let record = verify_symbolic().expect("battery runs");
    for check in &record.checks {
        let witness = check.witness.as_deref().unwrap_or("");
        let timing = if check.duration_ms > 0 {
            format!(" ({} ms)", check.duration_ms)
        } else {
            String::new()
        };
        if witness.is_empty() {
            println!("  [{}] {}{}", check.status, check.name, timing);
        } else {
            println!("  [{}] {} — {}{}", check.status, check.name, witness, timing);
        }
    }
    assert!(record.passed());
}
