//! A guided tour of one specialization: `W` at `λ = ζ_8`.
//!
//! This walks the full pipeline at a single root of unity, printing the
//! intermediate objects rather than just the verdicts:
//!
//! 1. build the six reflection generators over `Q(ζ_8)` and check one
//!    braid relation by hand,
//! 2. assemble `B`, the conjugate `M_0′ = B·M_0·B⁻¹`, and the element `W`,
//! 3. factor `char(W) = (x − 1)⁴(x² + Px + 1)` and read off `P`,
//! 4. decide the order, printing the certificate trail of both the fast
//!    path (sign of `P ± 2`) and the complete minimal-polynomial test.
//!
//! Run with: `cargo run --example order_at_root_of_unity`

use monodromy::scalars::cyclotomic::Cyclotomic;
use monodromy::wajnryb::{
    build_e6_rep, decide_order, decide_order_wajnryb, extract_p, fast_path, wajnryb_element,
    E6_EDGES,
};
use monodromy::Rational;

fn main() {
    let (q, p) = (8u64, 1u64);
    let rep = build_e6_rep(q, p).expect("ζ_8 ≠ 1");
    println!("generators over Q(ζ_{q}), λ = ζ_{q}^{p} = {}", rep.lambda);
    println!("tree edges (adjacent pairs): {E6_EDGES:?}");

    // One braid relation, verified by direct multiplication.
    let (i, j) = E6_EDGES[0];
    let mi = &rep.gens[i];
    let mj = &rep.gens[j];
    let lhs = mi.mul(&mj.mul(mi));
    let rhs = mj.mul(&mi.mul(mj));
    println!("M_{i}·M_{j}·M_{i} = M_{j}·M_{i}·M_{j}: {}", lhs == rhs);

    // The word and its characteristic polynomial.
    let word = wajnryb_element(&rep);
    let cp = word.w.char_poly();
    let coeffs: Vec<String> = cp.coeffs().iter().map(|c| c.to_string()).collect();
    println!("\nchar(W) coefficients (x⁰ … x⁶): [{}]", coeffs.join(", "));

    let p_value = extract_p(&cp).expect("factorization (x−1)⁴(x²+Px+1)");
    println!("P(ζ_{q}) = {p_value}");
    let two = Cyclotomic::from_rational(Rational::from_integer(2.into()));
    println!(
        "real? {}   sign of P + 2: {}",
        p_value.is_real(),
        (p_value.clone() + two).sign_of_real()
    );

    // Fast path: decisive only when |P| > 2. Here θ = π/4 lies outside the
    // wedge and P(ζ_8) ∈ [−2, 2], so the fast path reports "inconclusive"
    // and defers.
    let (verdict, steps) = fast_path(&p_value);
    println!("\nfast path: {verdict:?}");
    for step in &steps {
        println!("  {}: {}", step.test, step.outcome);
    }

    // Complete test: restrict scalars (6·φ(8) = 24 rational dimensions),
    // minimal polynomial, cyclotomic peeling. The leftover quartic is not a
    // product of cyclotomics, so W has infinite order even at this angle.
    println!("\ncomplete test:");
    let complete = decide_order(&word.w);
    println!("  verdict: {}", complete.verdict);
    println!("  trail:   {}", complete.trail_summary());

    // The combined decision procedure agrees with both.
    let combined = decide_order_wajnryb(&word.w, &p_value);
    assert_eq!(combined.verdict, complete.verdict);
    println!("\ncombined verdict: {}", combined.verdict);
}
