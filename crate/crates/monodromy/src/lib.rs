//! Exact-arithmetic toolkit for the monodromy of cyclic branched covers.
//!
//! The library reconstructs, in exact arithmetic, the linear-algebraic side of
//! a family of mapping-class-group computations:
//!
//! * **Milnor lattices** of the singularities `x^2 + y^k` (a chain of `k - 1`
//!   nodes) and `x^2 + y^k` suspended over a cusp, together with their deck
//!   transformations, Picard–Lefschetz twists, and Coxeter-style monodromy
//!   ([`lattice`]).
//! * **Eigenspace decompositions** of those lattices under the deck map, the
//!   induced Hermitian forms, and the complex reflections that the twists
//!   restrict to on each eigenspace ([`eigenspace`]).
//! * A **rank-six unitary reflection representation** over the Laurent ring
//!   `Z[λ, λ⁻¹]`, the element `W` built from a braid-like factorization inside
//!   it, the quadratic factor of its characteristic polynomial, and exact
//!   infinite-order certificates for specializations of `λ` at roots of unity
//!   ([`wajnryb`]).
//!
//! All computations run over exact scalar domains ([`scalars`]): arbitrary
//! precision rationals, rational functions in `λ` with the involution
//! `λ ↦ λ⁻¹`, cyclotomic fields, and outward-rounded dyadic interval
//! arithmetic for the few places where a rigorous real enclosure is needed.
//!
//! Every verification routine produces a [`report::VerificationReport`] whose
//! checks carry machine-readable witnesses, so a run can be audited after the
//! fact. The `verify-all` entry point ([`verify::verify_all`]) replays the
//! full battery end to end.

pub mod eigenspace;
pub mod lattice;
pub mod matrix;
pub mod report;
pub mod scalars;
pub mod verify;
pub mod wajnryb;

pub use report::{Check, CheckStatus, VerificationReport};
pub use scalars::rational::Rational;
