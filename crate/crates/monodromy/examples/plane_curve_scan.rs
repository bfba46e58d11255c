//! Infinite-order certificates for every admissible angle of a plane curve.
//!
//! A smooth plane curve of degree `d` admits one-parameter families whose
//! monodromy specializes `W` at `λ = e^(2πi·p/d)` for the admissible
//! exponents `⌈d/4⌉ ≤ p ≤ ⌊2d/5⌋` — precisely the fractions with
//! `1/4 ≤ p/d ≤ 2/5`, i.e. angles inside the wedge `[π/2, 4π/5]`. For each
//! one, `P(λ) < −2` forces a real eigenvalue `μ < −1` on the quadratic
//! factor, so the image of the monodromy representation contains an element
//! of infinite order.
//!
//! The covering degree attached to `p/d` is `k = d / gcd(p, d)`. The
//! supporting geometric statement needs `k ≥ 4`; fractions with `k < 4`
//! (only `d = 6`, `p = 2`, `k = 3` in low degree) are flagged, and the
//! verdict at that root of unity is still computed directly from `P`.
//!
//! Run with: `cargo run --example plane_curve_scan`

use monodromy::wajnryb::{
    admissible_fraction, build_e6_rep, decide_order_wajnryb, extract_p, wajnryb_element,
};

fn main() {
    for d in 4u64..=12 {
        let fractions = admissible_fraction(d);
        if fractions.is_empty() {
            println!("d = {d}: no admissible fractions");
            continue;
        }
        println!("d = {d}:");
        for f in fractions {
            let rep = build_e6_rep(d, f.p).expect("0 < p < d");
            let word = wajnryb_element(&rep);
            let p_value = extract_p(&word.w.char_poly()).expect("factorization");
            let result = decide_order_wajnryb(&word.w, &p_value);
            let flag = if f.k_at_least_4 {
                String::new()
            } else {
                format!("  [k = {} < 4: outside the geometric statement]", f.k)
            };
            println!(
                "  p/d = {}/{d}  (k = {}):  P = {}  →  {}{flag}",
                f.p, f.k, p_value, result.verdict
            );
        }
    }
}
