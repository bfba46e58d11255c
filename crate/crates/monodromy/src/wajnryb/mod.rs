//! The six-dimensional complex-reflection representation attached to the E6
//! curve configuration, the Wajnryb element `W`, and the machinery that
//! decides whether its specializations have finite or infinite order.
//!
//! The pieces, in dependency order:
//!
//! * [`rep`] — the Hermitian form and reflection generators `M_0, …, M_5`
//!   over any scalar field with a bar involution, the braid element
//!   `B = M_3M_2M_4M_3M_1M_5M_2M_4M_3`, the conjugate `M_0′ = BM_0B⁻¹`, and
//!   `W = (M_0M_0′M_0)(M_0′M_0M_0′)⁻¹`; the characteristic polynomial of `W`
//!   factors as `(x−1)⁴(x² + P(λ)x + 1)` and [`rep::extract_p`] recovers the
//!   degree-9 symmetric Laurent polynomial `P`.
//! * [`order`] — a total decision procedure for the order of a matrix over
//!   `Q(ζ_q)`: a fast spectral test on `P` (real and in `[−2, 2]` or not),
//!   then restriction of scalars to `Q`, the minimal polynomial, division by
//!   cyclotomic factors, and an exact final power check.
//! * [`certify`] — a rigorous interval certificate that
//!   `P(e^{iθ}) < bound` on a θ-interval, by adaptive bisection with
//!   outward-rounded cosine enclosures and a global Lipschitz constant.
//! * [`shadow`] — the integer symplectic-transvection shadow of the same
//!   words: substituting transvections for the reflections must send `W` to
//!   the identity, the homological fingerprint of the relation that makes
//!   `W` a kernel element.

pub mod certify;
pub mod order;
pub mod rep;
pub mod shadow;

use thiserror::Error;

pub use certify::{certify_interval, AngleFraction, IntervalCertificate};
pub use order::{
    admissible_fraction, decide_order, decide_order_wajnryb, fast_path, AdmissibleFraction,
    CertStep, OrderResult, Verdict,
};
pub use rep::{
    build_e6_rep, build_e6_rep_symbolic, extract_p, reference_p, symbolic_p, verify_symbolic,
    wajnryb_element, ReflectionRep, WajnrybWord, B_WORD, E6_EDGES,
};
pub use shadow::{skew_form, transvection_generators, transvection_shadow};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WajnrybError {
    /// `λ = 1`: the Hermitian form's off-diagonal entries `(1−λ)⁻¹` are
    /// undefined.
    #[error("λ = 1 is degenerate: the form entries (1−λ)⁻¹ are undefined")]
    DegenerateLambda,
    /// The characteristic polynomial of `W` did not factor as
    /// `(x−1)⁴(x² + Px + 1)`.
    #[error("characteristic polynomial does not factor as (x−1)⁴(x²+Px+1): {details}")]
    FactorizationMismatch { details: String },
    /// The interval certificate could not be produced. `refuted` tells a
    /// genuine counterexample (the bound is attained or exceeded at a
    /// tested point) apart from plain depth exhaustion.
    #[error("cannot certify sup P < {bound} on {interval}: {reason}")]
    CertificationFailed {
        interval: String,
        bound: String,
        reason: String,
        refuted: bool,
    },
    /// The requested θ-interval is empty or backwards.
    #[error("invalid interval: {details}")]
    InvalidInterval { details: String },
}
