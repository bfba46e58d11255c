//! Deciding whether a cyclotomic matrix has finite or infinite order.
//!
//! A matrix over `Q(ζ_q)` has finite order exactly when its minimal
//! polynomial over `Q` is a squarefree product of cyclotomic polynomials.
//! `decide_order` certifies either answer:
//!
//! 1. restrict scalars to get a rational matrix of size `n·φ(q)`,
//! 2. compute the minimal polynomial by a Krylov-style sweep,
//! 3. peel off each cyclotomic factor `Φ_m` once (candidates satisfy
//!    `φ(m) ≤ deg`); any leftover — a non-cyclotomic factor or a repeated
//!    root — certifies infinite order,
//! 4. otherwise raise the matrix to the lcm of the factor orders and scan
//!    the divisors for the exact order.
//!
//! For the element `W` there is also a fast path: `P(λ)` is bar-invariant,
//! hence real on `|λ| = 1`, and the quadratic factor `x² + Px + 1` has a root
//! off the unit circle whenever `|P| > 2` — immediate infinite order. The
//! combined `decide_order_wajnryb` tries the fast path first and records
//! every step in an auditable trail.
//!
//! Run with: `cargo run --example order_decision`

use monodromy::wajnryb::{
    build_e6_rep, decide_order, decide_order_wajnryb, extract_p, wajnryb_element,
};

fn main() {
    // A single reflection generator has the order of its eigenvalue: finite.
    let rep = build_e6_rep(4, 1).expect("λ = i is not 1");
    println!("M_1 at λ = i:");
    let result = decide_order(&rep.gens[0]);
    println!("  verdict: {}", result.verdict);
    println!("  trail:   {}", result.trail_summary());

    // W at a few roots of unity — infinite every time, but for different
    // reasons: inside the wedge (ζ_4, ζ_5², ζ_7²) the fast path sees
    // P < −2; at ζ_12⁵ the value is P = −2 exactly, the fast path is
    // inconclusive, and the complete test finds the Jordan block
    // (x − 1)² — a unipotent of infinite order.
    for (q, p) in [(4u64, 1u64), (5, 2), (7, 2), (12, 5)] {
        let rep = build_e6_rep(q, p).expect("λ ≠ 1");
        let word = wajnryb_element(&rep);
        let p_value = extract_p(&word.w.char_poly()).expect("factorization");
        println!("\nW at λ = ζ_{q}^{p}:  P = {p_value}");
        let result = decide_order_wajnryb(&word.w, &p_value);
        println!("  verdict: {}", result.verdict);
        for step in &result.certificate {
            println!("    {}: {}", step.test, step.outcome);
        }
    }

    // The complete path agrees where it is cheap enough to run: λ = i gives
    // a 6·φ(4) = 12-dimensional rational restriction.
    let rep = build_e6_rep(4, 1).expect("λ ≠ 1");
    let word = wajnryb_element(&rep);
    println!("\nW at λ = i, complete minimal-polynomial test (no fast path):");
    let result = decide_order(&word.w);
    println!("  verdict: {}", result.verdict);
    println!("  trail:   {}", result.trail_summary());
}
