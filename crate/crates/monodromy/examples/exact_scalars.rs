//! The exact scalar domains everything else is built on.
//!
//! Four layers, in decreasing generality and increasing concreteness:
//!
//! * `LambdaFunction` — rational functions in a formal unit `λ`, with the
//!   bar involution `λ ↦ λ⁻¹` (the "conjugation" a unitary representation
//!   over `Z[λ, λ⁻¹]` needs);
//! * `Laurent` — the subring `Z[λ, λ⁻¹]`-like Laurent polynomials over `Q`,
//!   where bar-invariant elements turn into cosine sums on `|λ| = 1`;
//! * `Cyclotomic` — `Q(ζ_q)` in the power basis modulo `Φ_q`, with exact
//!   conjugation, exact zero tests, and certified sign of the real part;
//! * dyadic `RealInterval` — outward-rounded enclosures with `π` and `cos`
//!   to arbitrary precision, for the few genuinely analytic steps.
//!
//! Specialization `λ ↦ ζ_q^p` is a ring homomorphism commuting with bar;
//! that square is the reason symbolic results transfer to every root of
//! unity at once.
//!
//! Run with: `cargo run --example exact_scalars`

use monodromy::scalars::cyclotomic::Cyclotomic;
use monodromy::scalars::dyadic::{cos_interval, pi_interval, RealInterval};
use monodromy::scalars::lambda::{LambdaFunction, Laurent};
use monodromy::scalars::Scalar;
use monodromy::Rational;

fn main() {
    // --- Laurent polynomials and the bar involution ---------------------
    // f = λ + λ⁻¹ is bar-invariant; on the circle it is 2cos(θ).
    let f = Laurent::from_i64(-1, &[1, 0, 1]);
    println!("f = {f}");
    println!("bar-invariant: {}", f.is_bar_invariant());
    let cosines = f.cosine_coefficients().expect("bar-invariant");
    println!("cosine coefficients (c_0, c_1, …): {cosines:?}");

    // Exact evaluation: f(2) = 2 + 1/2 = 5/2.
    let two = Rational::from_integer(2.into());
    println!("f(2) = {}", f.eval_rational(&two));

    // --- rational functions in λ ----------------------------------------
    // g = 1/(1 − λ), the factor that makes λ = 1 degenerate everywhere.
    let one = LambdaFunction::one();
    let g = (one.clone() - LambdaFunction::lambda()).inv().expect("1 − λ ≠ 0");
    println!("\ng = 1/(1 − λ) = {g}");
    println!("g · (1 − λ) = {}", g.clone() * (one - LambdaFunction::lambda()));
    // Specialization is exact: g(ζ_4) = 1/(1 − i) = (1 + i)/2.
    let g_at_i = g.specialize(4, 1).expect("denominator nonzero at i");
    println!("g(i) = {g_at_i}");

    // --- cyclotomic arithmetic -------------------------------------------
    let zeta = Cyclotomic::root_of_unity(12, 1);
    println!("\nζ_12 = {zeta},  ζ_12·conj(ζ_12) = {}", zeta.clone() * zeta.conjugate());
    // ζ_12 + conj(ζ_12) = 2cos(π/6) = √3: not rational, but exactly real.
    let trace = zeta.clone() + zeta.conjugate();
    println!("ζ_12 + ζ̄_12 = {trace}   (real: {}, sign: {})", trace.is_real(), trace.sign_of_real());
    // Its square is exactly 3.
    println!("(ζ_12 + ζ̄_12)² = {}", trace.clone() * trace);

    // --- certified real enclosures ----------------------------------------
    let prec = 64;
    let pi = pi_interval(prec);
    println!("\nπ ∈ [{}, {}]", pi.lo().to_f64(), pi.hi().to_f64());
    // cos(π/3) = 1/2, enclosed to ~2⁻⁶⁴.
    let third = Rational::new(1.into(), 3.into());
    let angle = pi.mul_rational(&third, prec);
    let c = cos_interval(&angle, prec);
    println!("cos(π/3) ∈ [{}, {}]", c.lo().to_f64(), c.hi().to_f64());
    let half = RealInterval::from_rational(&Rational::new(1.into(), 2.into()), prec);
    assert!(c.lo().to_rational() <= half.lo().to_rational());
    assert!(half.hi().to_rational() <= c.hi().to_rational());
    println!("the enclosure brackets the exact value 1/2");
}
