//! Rigorous certification of `sup P(e^(iθ)) < −2` on an angle interval.
//!
//! On the unit circle the bar-invariant Laurent polynomial `P` collapses to a
//! cosine sum `P(e^(iθ)) = c_0 + Σ_j 2c_j·cos(jθ)` with integer coefficients,
//! hence is Lipschitz with the explicit constant `L = 2·Σ_j j·|c_j|`. The
//! certifier bisects the interval; a node `[a, b]` is accepted once
//!
//! ```text
//! P(midpoint) + L·(b − a)/2 < bound
//! ```
//!
//! holds in outward-rounded dyadic interval arithmetic — every accepted leaf
//! is a proof, no floating point is trusted. Points can only *refute*: if an
//! exact cyclotomic evaluation (denominator small enough for the `Q(ζ_{2d})`
//! table) or a point enclosure shows `P(θ₀) ≥ bound`, the claim is dead and
//! the witness names the point.
//!
//! The wedge `θ ∈ [π/2, 4π/5]` is the one the infinite-order argument needs:
//! there `P < −2` strictly, so the quadratic `x² + Px + 1` has a real root
//! `μ < −1` and `W` acquires an eigenvalue off the unit circle.
//!
//! Run with: `cargo run --example interval_certificate`

use monodromy::wajnryb::{certify_interval, AngleFraction, WajnrybError};
use monodromy::Rational;

fn main() {
    let bound = Rational::from_integer((-2).into());

    // The wedge: certified strictly below −2.
    let from = AngleFraction::new(1, 2).expect("valid");
    let to = AngleFraction::new(4, 5).expect("valid");
    match certify_interval(&from, &to, &bound, 40) {
        Ok(cert) => {
            println!("certified: P(e^(iθ)) < −2 on [{from}, {to}]");
            println!("  {}", cert.summary());
            println!("  leaves: {}, subdivisions: {}", cert.leaves, cert.subdivisions);
            println!("  worst enclosure upper bound: {}", cert.worst_upper);
            println!("  margin below the bound:      {}", cert.margin);
        }
        Err(e) => panic!("the wedge certificate must succeed: {e}"),
    }

    // An interval containing θ = 0 cannot satisfy sup P < −2: the value
    // P(1) = −2 attains the bound, and the certifier says so exactly.
    let from = AngleFraction::new(-1, 100).expect("valid");
    let to = AngleFraction::new(1, 100).expect("valid");
    match certify_interval(&from, &to, &bound, 40) {
        Err(WajnrybError::CertificationFailed { reason, refuted: true, .. }) => {
            println!("\nrefuted as expected on [{from}, {to}]:");
            println!("  {reason}");
        }
        other => panic!("expected a refutation, got {other:?}"),
    }

    // A tight bound just below the true supremum of the wedge still
    // certifies — the bisection works down to the margin.
    let from = AngleFraction::new(1, 2).expect("valid");
    let to = AngleFraction::new(4, 5).expect("valid");
    let tighter = Rational::new((-9).into(), 4.into()); // −2.25
    match certify_interval(&from, &to, &tighter, 40) {
        Ok(cert) => {
            println!("\ncertified the tighter bound P < −9/4 on the wedge:");
            println!("  {}", cert.summary());
        }
        Err(WajnrybError::CertificationFailed { reason, .. }) => {
            println!("\ntighter bound −9/4 not certified: {reason}");
        }
        Err(e) => panic!("unexpected error: {e}"),
    }
}
