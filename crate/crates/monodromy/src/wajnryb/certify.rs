//! Rigorous interval certificates for `sup P(e^{iθ}) < bound`.
//!
//! On the unit circle the bar-invariant Laurent polynomial `P` is real:
//! writing `c_0, …, c_9` for its
//! [cosine coefficients](crate::scalars::lambda::Laurent::cosine_coefficients),
//!
//! ```text
//! P(e^{iθ}) = c_0 + 2·Σ_{j=1}^{9} c_j cos(jθ),       |dP/dθ| ≤ 2·Σ j·|c_j| = L.
//! ```
//!
//! [`certify_interval`] bisects the θ-interval adaptively. On each node
//! `[aπ, bπ]` it encloses `P` at the midpoint angle with outward-rounded
//! interval cosines and widens by `L·(half-width)`; if the enclosure's upper
//! end is below the bound the node is certified, otherwise the node is split.
//! Two exact backstops separate a genuine refutation from mere depth
//! exhaustion:
//!
//! * whenever a tested point `θ = (n/d)π` has small denominator, `P(e^{iθ})`
//!   is evaluated **exactly** in `Q(ζ_{2d})` and compared with the bound by a
//!   rigorous sign test — this catches boundary attainment such as
//!   `P(1) = −2` when the bound is `−2`;
//! * otherwise the point value is enclosed numerically, and a lower end at or
//!   above the bound also refutes.
//!
//! A successful run returns an [`IntervalCertificate`] with the subdivision
//! statistics and the certified margin `bound − sup(enclosures)`; a failed
//! run reports either `refuted = true` (the bound provably does not hold)
//! or `refuted = false` (the depth budget ran out before the enclosures
//! settled — inconclusive, not a counterexample).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::scalars::cyclotomic::Cyclotomic;
use crate::scalars::dyadic::{cos_interval, pi_interval, RealInterval};
use crate::scalars::rational::{rat, rat_int, Rational};
use crate::scalars::Scalar;

use super::rep::reference_p;
use super::WajnrybError;

/// Working precision (bits) for the interval enclosures.
const PREC: u64 = 96;

/// Largest denominator of `θ/π` for which point values are evaluated exactly
/// in `Q(ζ_{2d})` rather than enclosed numerically. Keeps the cyclotomic
/// field tables small while still covering every humanly entered endpoint
/// and the first few bisection midpoints.
const EXACT_DENOM_LIMIT: u64 = 128;

/// A rational multiple of π, written `N/D-pi` on the command line
/// (`1/2-pi` is `π/2`; negative numerators are allowed, `D > 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngleFraction {
    pub numer: i64,
    pub denom: i64,
}

impl AngleFraction {
    pub fn new(numer: i64, denom: i64) -> Result<Self, WajnrybError> {
        if denom <= 0 {
            return Err(WajnrybError::InvalidInterval {
                details: format!("angle denominator must be positive, got {denom}"),
            });
        }
        Ok(AngleFraction { numer, denom })
    }

    /// The coordinate `t = θ/π`.
    pub fn as_rational(&self) -> Rational {
        rat(self.numer, self.denom)
    }
}

impl fmt::Display for AngleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}-pi", self.numer, self.denom)
    }
}

impl FromStr for AngleFraction {
    type Err = WajnrybError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |details: String| WajnrybError::InvalidInterval { details };
        let body = s
            .strip_suffix("-pi")
            .ok_or_else(|| bad(format!("expected an angle of the form N/D-pi, got {s:?}")))?;
        let (n_str, d_str) = match body.split_once('/') {
            Some((n, d)) => (n, d),
            None => (body, "1"),
        };
        let numer: i64 = n_str
            .trim()
            .parse()
            .map_err(|_| bad(format!("cannot parse numerator {n_str:?} in {s:?}")))?;
        let denom: i64 = d_str
            .trim()
            .parse()
            .map_err(|_| bad(format!("cannot parse denominator {d_str:?} in {s:?}")))?;
        AngleFraction::new(numer, denom)
    }
}

impl Serialize for AngleFraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The statistics of a successful certification run.
#[derive(Debug, Clone)]
pub struct IntervalCertificate {
    pub from: AngleFraction,
    pub to: AngleFraction,
    /// The strict upper bound that was certified.
    pub bound: Rational,
    /// Number of bisections performed.
    pub subdivisions: u64,
    /// Number of certified leaf intervals.
    pub leaves: u64,
    /// The largest upper enclosure over all certified leaves — a rigorous
    /// upper bound for `sup P` on the whole interval.
    pub worst_upper: Rational,
    /// `bound − worst_upper` (positive by construction).
    pub margin: Rational,
    /// Deepest bisection level that occurred.
    pub max_depth_used: u32,
    /// The Lipschitz constant `L = 2Σ j·|c_j|` used for the widening.
    pub lipschitz: Rational,
}

fn approx(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl IntervalCertificate {
    /// One human-readable line for reports.
    pub fn summary(&self) -> String {
        format!(
            "sup P(e^(iθ)) ≤ {:.6} < {} for θ ∈ [{}, {}]; margin {:.6}; {} leaves, {} subdivisions, deepest level {}",
            approx(&self.worst_upper),
            self.bound,
            self.from,
            self.to,
            approx(&self.margin),
            self.leaves,
            self.subdivisions,
            self.max_depth_used,
        )
    }
}

impl Serialize for IntervalCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntervalCertificate", 10)?;
        st.serialize_field("from", &self.from)?;
        st.serialize_field("to", &self.to)?;
        st.serialize_field("bound", &self.bound.to_string())?;
        st.serialize_field("subdivisions", &self.subdivisions)?;
        st.serialize_field("leaves", &self.leaves)?;
        st.serialize_field("worst_upper", &self.worst_upper.to_string())?;
        st.serialize_field("worst_upper_approx", &approx(&self.worst_upper))?;
        st.serialize_field("margin", &self.margin.to_string())?;
        st.serialize_field("margin_approx", &approx(&self.margin))?;
        st.serialize_field("max_depth_used", &self.max_depth_used)?;
        st.end()
    }
}

/// `L = 2·Σ_{j≥1} j·|c_j|`, a global bound for `|dP/dθ|` on the circle.
pub(crate) fn lipschitz_constant(cosine: &[Rational]) -> Rational {
    let mut acc = rat_int(0);
    for (j, c) in cosine.iter().enumerate().skip(1) {
        let abs = if c < &rat_int(0) { -c.clone() } else { c.clone() };
        acc = acc + rat_int(2 * j as i64) * abs;
    }
    acc
}

/// Pretty label for the point `e^{iπt}`: `1`, `-1`, or `e^(iπ·n/d)`.
fn point_label(t: &Rational) -> String {
    if Scalar::is_zero(t) {
        "1".to_string()
    } else if *t == rat_int(1) || *t == rat_int(-1) {
        "-1".to_string()
    } else {
        format!("e^(iπ·{t})")
    }
}

/// Exact value of `P(e^{iπt})` as an element of `Q(ζ_{2d})`, when the
/// denominator `d` of `t` is small enough to make that cheap.
fn exact_value(t: &Rational) -> Option<Cyclotomic> {
    let d = t.denom().to_u64()?;
    if d > EXACT_DENOM_LIMIT {
        return None;
    }
    let q = 2 * d;
    let e = t.numer().mod_floor(&num_bigint::BigInt::from(q)).to_u64()?;
    Some(reference_p().eval_root_of_unity(q, e))
}

struct Search<'a> {
    cosine: Vec<Rational>,
    lipschitz: Rational,
    bound: &'a Rational,
    max_depth: u32,
    interval_label: String,
    subdivisions: u64,
    leaves: u64,
    worst_upper: Option<Rational>,
    max_depth_used: u32,
}

impl<'a> Search<'a> {
    fn fail(&self, reason: String, refuted: bool) -> WajnrybError {
        WajnrybError::CertificationFailed {
            interval: self.interval_label.clone(),
            bound: self.bound.to_string(),
            reason,
            refuted,
        }
    }

    /// Interval enclosure of `P(e^{iθ})` for `θ = tπ`, `t` exact rational.
    fn point_enclosure(&self, t: &Rational) -> RealInterval {
        let pi = pi_interval(PREC);
        let mut acc = RealInterval::from_rational(&self.cosine[0], PREC);
        for (j, c) in self.cosine.iter().enumerate().skip(1) {
            if Scalar::is_zero(c) {
                continue;
            }
            let angle = pi.mul_rational(&(t.clone() * rat_int(j as i64)), PREC);
            let term = cos_interval(&angle, PREC).mul_rational(&(rat_int(2) * c.clone()), PREC);
            acc = acc + term;
        }
        acc
    }

    /// Enclosure of `P` over the whole node `θ/π ∈ [a, b]`: the midpoint
    /// enclosure widened by `L·π·(b−a)/2`.
    fn node_enclosure(&self, a: &Rational, b: &Rational) -> RealInterval {
        let mid = (a.clone() + b.clone()) * rat(1, 2);
        let acc = self.point_enclosure(&mid);
        let half_width = (b.clone() - a.clone()) * rat(1, 2);
        let slop = pi_interval(PREC)
            .mul_rational(&(half_width * self.lipschitz.clone()), PREC)
            .hi()
            .clone();
        acc.widen(&slop)
    }

    /// Tries to refute the bound at the single point `θ = tπ`; `Ok(())`
    /// means the point is consistent with `P < bound` (or inconclusive
    /// numerically, which never blocks certification — only enclosures
    /// certify).
    fn refute_at(&self, t: &Rational) -> Result<(), WajnrybError> {
        if let Some(value) = exact_value(t) {
            assert!(value.is_real(), "P is bar-invariant, so circle values are real");
            let diff = value.clone() - Cyclotomic::from_rational(self.bound.clone());
            if diff.sign_of_real() >= 0 {
                let shown = match value.as_rational() {
                    Some(r) => r.to_string(),
                    None => value.to_string(),
                };
                return Err(self.fail(
                    format!(
                        "P({}) = {} ≥ {} — the bound is attained or exceeded at a point of the interval",
                        point_label(t),
                        shown,
                        self.bound
                    ),
                    true,
                ));
            }
            return Ok(());
        }
        let enclosure = self.point_enclosure(t);
        if &enclosure.lo().to_rational() >= self.bound {
            return Err(self.fail(
                format!(
                    "P({}) ≥ {:.6} ≥ {} by a rigorous point enclosure",
                    point_label(t),
                    enclosure.lo().to_f64(),
                    self.bound
                ),
                true,
            ));
        }
        Ok(())
    }

    fn node(&mut self, a: &Rational, b: &Rational, depth: u32) -> Result<(), WajnrybError> {
        self.max_depth_used = self.max_depth_used.max(depth);
        let enclosure = self.node_enclosure(a, b);
        let upper = enclosure.hi().to_rational();
        if &upper < self.bound {
            self.leaves += 1;
            match &self.worst_upper {
                Some(w) if w >= &upper => {}
                _ => self.worst_upper = Some(upper),
            }
            return Ok(());
        }
        let mid = (a.clone() + b.clone()) * rat(1, 2);
        self.refute_at(&mid)?;
        if depth >= self.max_depth {
            return Err(self.fail(
                format!(
                    "depth budget {} exhausted on θ/π ∈ [{a}, {b}]: enclosure [{:.6}, {:.6}] does not fall below the bound",
                    self.max_depth,
                    enclosure.lo().to_f64(),
                    enclosure.hi().to_f64(),
                ),
                false,
            ));
        }
        self.subdivisions += 1;
        self.node(a, &mid, depth + 1)?;
        self.node(&mid, b, depth + 1)
    }
}

/// Certifies `P(e^{iθ}) < bound` for every `θ ∈ [lo·π, hi·π]`, or reports
/// why it cannot. `Err` with `refuted = true` carries a point witness that
/// the strict bound is false; `refuted = false` means the depth budget ran
/// out (inconclusive).
pub fn certify_interval(
    lo: &AngleFraction,
    hi: &AngleFraction,
    bound: &Rational,
    max_depth: u32,
) -> Result<IntervalCertificate, WajnrybError> {
    let a = lo.as_rational();
    let b = hi.as_rational();
    if a >= b {
        return Err(WajnrybError::InvalidInterval {
            details: format!("need lo < hi, got {lo} .. {hi}"),
        });
    }
    let cosine = reference_p()
        .cosine_coefficients()
        .expect("the eigenvalue polynomial is bar-invariant");
    let lipschitz = lipschitz_constant(&cosine);
    let mut search = Search {
        cosine,
        lipschitz: lipschitz.clone(),
        bound,
        max_depth,
        interval_label: format!("θ ∈ [{lo}, {hi}]"),
        subdivisions: 0,
        leaves: 0,
        worst_upper: None,
        max_depth_used: 0,
    };
    search.refute_at(&a)?;
    search.refute_at(&b)?;
    search.node(&a, &b, 0)?;
    let worst_upper = search
        .worst_upper
        .expect("a successful search certifies at least one leaf");
    Ok(IntervalCertificate {
        from: *lo,
        to: *hi,
        bound: bound.clone(),
        subdivisions: search.subdivisions,
        leaves: search.leaves,
        margin: bound.clone() - worst_upper.clone(),
        worst_upper,
        max_depth_used: search.max_depth_used,
        lipschitz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angle(s: &str) -> AngleFraction {
        s.parse().unwrap()
    }

    #[test]
    fn angle_fraction_parses_and_round_trips() {
        let a = angle("1/2-pi");
        assert_eq!((a.numer, a.denom), (1, 2));
        assert_eq!(a.to_string(), "1/2-pi");
        assert_eq!(angle("-3/7-pi"), AngleFraction::new(-3, 7).unwrap());
        assert_eq!(angle("2-pi"), AngleFraction::new(2, 1).unwrap());
        assert!("1/2".parse::<AngleFraction>().is_err());
        assert!("x/2-pi".parse::<AngleFraction>().is_err());
        assert!("1/0-pi".parse::<AngleFraction>().is_err());
    }

    #[test]
    fn lipschitz_constant_is_556() {
        let cosine = reference_p().cosine_coefficients().unwrap();
        assert_eq!(lipschitz_constant(&cosine), rat_int(556));
    }

    #[test]
    fn exact_values_at_small_angles() {
        // θ = 0 → λ = 1 → P = −2.
        assert_eq!(exact_value(&rat_int(0)).unwrap().as_rational(), Some(rat_int(-2)));
        // θ = 2π/3 → λ = ζ_3 → P = −146 (group the coefficients mod 3).
        assert_eq!(
            exact_value(&rat(2, 3)).unwrap().as_rational(),
            Some(rat_int(-146))
        );
        // θ = π/2 → λ = i → P = −50.
        assert_eq!(exact_value(&rat(1, 2)).unwrap().as_rational(), Some(rat_int(-50)));
        // Huge denominators are declined rather than evaluated.
        assert_eq!(exact_value(&rat(1, 129)), None);
    }

    #[test]
    fn certifies_the_main_wedge_below_minus_two() {
        let cert = certify_interval(&angle("1/2-pi"), &angle("4/5-pi"), &rat_int(-2), 40).unwrap();
        assert!(cert.margin > rat_int(0), "margin must be positive");
        assert!(cert.worst_upper < rat_int(-2));
        assert!(cert.subdivisions < 100_000, "subdivisions = {}", cert.subdivisions);
        assert!(cert.leaves > 0);
        assert_eq!(cert.lipschitz, rat_int(556));
    }

    #[test]
    fn refutes_at_the_endpoint_theta_zero() {
        // P(1) = −2, so the strict bound −2 fails at the left endpoint.
        let err = certify_interval(&angle("0/1-pi"), &angle("1/100-pi"), &rat_int(-2), 40)
            .unwrap_err();
        match err {
            WajnrybError::CertificationFailed { refuted, reason, .. } => {
                assert!(refuted);
                assert!(reason.contains("P(1) = -2"), "reason = {reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn refutes_at_an_interior_midpoint() {
        // θ = 0 is interior here; the first midpoint finds it exactly.
        let err = certify_interval(&angle("-1/100-pi"), &angle("1/100-pi"), &rat_int(-2), 40)
            .unwrap_err();
        match err {
            WajnrybError::CertificationFailed { refuted, reason, .. } => {
                assert!(refuted);
                assert!(reason.contains("P(1) = -2"), "reason = {reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn depth_exhaustion_is_not_a_refutation() {
        let err =
            certify_interval(&angle("1/2-pi"), &angle("4/5-pi"), &rat_int(-2), 0).unwrap_err();
        match err {
            WajnrybError::CertificationFailed { refuted, reason, .. } => {
                assert!(!refuted);
                assert!(reason.contains("depth budget"), "reason = {reason}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_backwards_intervals() {
        let err = certify_interval(&angle("4/5-pi"), &angle("1/2-pi"), &rat_int(-2), 4)
            .unwrap_err();
        assert!(matches!(err, WajnrybError::InvalidInterval { .. }));
    }

    #[test]
    fn certificate_serializes_with_exact_strings() {
        let cert = certify_interval(&angle("1/2-pi"), &angle("3/5-pi"), &rat_int(-2), 40).unwrap();
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(json["from"], "1/2-pi");
        assert!(json["margin_approx"].as_f64().unwrap() > 0.0);
    }
}
