//! The full verification battery in one call.
//!
//! `verify::verify_all` replays everything the crate claims, in order:
//!
//! 1. node and cusp lattices for `k = 2, …, kmax` (grams, deck orders,
//!    closed-form monodromy, twist involutions),
//! 2. eigenspace identities and the normalized pairing table at every
//!    `(k, p)`,
//! 3. the symbolic battery for `W` over `Z[λ, λ⁻¹]` and the integral
//!    transvection shadow,
//! 4. the interval certificate `P < −2` on the wedge `[π/2, 4π/5]`,
//! 5. the order grid: every admissible `λ = ζ_q^p` with `4 ≤ q ≤ qmax`,
//!    `1/4 ≤ p/q ≤ 2/5` has infinite-order `W`, cross-checked against the
//!    complete minimal-polynomial test where that is cheap,
//! 6. the plane-curve scan for `4 ≤ d ≤ qmax`.
//!
//! The returned report carries one check per assertion, each with a witness
//! string; the process exit code of the `verify-all` CLI subcommand is the
//! report's overall status (0 pass / 1 fail / 2 inconclusive).
//!
//! Run with: `cargo run --example verify_all` (a few seconds with the
//! default dev profile; the full default scope is `kmax = 8`, `qmax = 20`)

use monodromy::verify::{verify_all, RunConfig};
use monodromy::CheckStatus;

fn main() {
    // A reduced scope keeps the example snappy; the CLI defaults run wider.
    let cfg = RunConfig { kmax: 5, qmax: 12, max_depth: 40 };
    cfg.validate().expect("valid config");
    let report = verify_all(&cfg);

    // Print failures and a section-free summary instead of all ~150 lines.
    let mut passed = 0;
    for check in &report.checks {
        match check.status {
            CheckStatus::Pass => passed += 1,
            _ => {
                let witness = check.witness.as_deref().unwrap_or("");
                println!("[{}] {} — {}", check.status, check.name, witness);
            }
        }
    }
    println!("{passed}/{} checks passed", report.checks.len());
    println!("overall: {}   (exit code {})", report.status(), report.exit_code());
    println!("wall clock: {} ms", report.timing_ms);

    // The JSON form is what the CLI writes with --json.
    let json = report.to_json();
    println!("\nJSON report: {} bytes, keys sorted, stable across runs", json.len());
}
