//! Outward-rounded dyadic interval arithmetic.
//!
//! A [`Dyadic`] is an exact number `m · 2^e` with `m` an arbitrary-precision
//! integer. Sums, differences, and products of dyadics are again dyadic, so
//! the only places rounding enters are (a) converting a rational to a dyadic
//! enclosure, (b) the series for `π`, `cos`, and `sin`, and (c) explicit
//! precision trimming. All rounding is outward: a [`RealInterval`] returned
//! by any routine here always contains the mathematical value.
//!
//! `π` comes from Machin's formula `π = 16·arctan(1/5) − 4·arctan(1/239)`;
//! both series are alternating with decreasing terms, so consecutive partial
//! sums bracket the limit and the bracket is exact rational arithmetic until
//! the final outward rounding. `cos` and `sin` are evaluated by a Taylor
//! series after rigorous reduction modulo `2π`, with the first omitted term
//! bounding the tail (valid once the terms are decreasing), and extended from
//! points to intervals through the Lipschitz bound `|cos'| ≤ 1`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

/// An exact dyadic number `mant · 2^exp`, normalized so that `mant` is odd
/// or zero (and `exp = 0` for zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        let mut d = Dyadic { mant, exp };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    fn normalize(&mut self) {
        if self.mant.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz;
            self.exp += tz as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// Significant bits of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(self.mant.clone() << self.exp)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    /// Largest dyadic with at most `prec` mantissa bits that is `≤ self`.
    /// (`BigInt` right shift rounds toward −∞, which is exactly floor.)
    pub fn round_down(&self, prec: u64) -> Self {
        let bits = self.bits();
        if bits <= prec {
            return self.clone();
        }
        let shift = bits - prec;
        Dyadic::new(self.mant.clone() >> shift, self.exp + shift as i64)
    }

    /// Smallest dyadic with at most `prec` mantissa bits that is `≥ self`.
    pub fn round_up(&self, prec: u64) -> Self {
        -((-self.clone()).round_down(prec))
    }

    /// Exact halving.
    pub fn half(&self) -> Self {
        Dyadic::new(self.mant.clone(), self.exp - 1)
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let e = self.exp.min(rhs.exp);
        let a = self.mant << (self.exp - e) as u64;
        let b = rhs.mant << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl std::ops::Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        self + (-rhs)
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -self.mant, exp: self.exp }
    }
}

impl std::ops::Mul for Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: Dyadic) -> Dyadic {
        Dyadic::new(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.min(other.exp);
        let a = self.mant.clone() << (self.exp - e) as u64;
        let b = other.mant.clone() << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (= {}·2^{})", self.to_f64(), self.mant, self.exp)
    }
}

/// A closed real interval `[lo, hi]` with dyadic endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl RealInterval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "inverted interval endpoints");
        RealInterval { lo, hi }
    }

    pub fn point(d: Dyadic) -> Self {
        RealInterval { lo: d.clone(), hi: d }
    }

    pub fn zero() -> Self {
        RealInterval::point(Dyadic::zero())
    }

    /// Outward enclosure of an exact rational with `prec`-bit endpoints.
    pub fn from_rational(r: &Rational, prec: u64) -> Self {
        // Scale so the floor keeps at least `prec` significant bits, then trim.
        let shift = prec + r.denom().bits() + 2;
        let scaled = num_integer::Integer::div_floor(&(r.numer().clone() << shift), r.denom());
        let lo = Dyadic::new(scaled.clone(), -(shift as i64)).round_down(prec);
        let hi = Dyadic::new(scaled + 1, -(shift as i64)).round_up(prec);
        RealInterval { lo, hi }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> Dyadic {
        (self.lo.clone() + self.hi.clone()).half()
    }

    /// Enlarges both endpoints by `r ≥ 0`.
    pub fn widen(&self, r: &Dyadic) -> Self {
        assert!(*r >= Dyadic::zero(), "negative widening radius");
        RealInterval { lo: self.lo.clone() - r.clone(), hi: self.hi.clone() + r.clone() }
    }

    /// Outward rounding of both endpoints to `prec` mantissa bits.
    pub fn round_out(&self, prec: u64) -> Self {
        RealInterval { lo: self.lo.round_down(prec), hi: self.hi.round_up(prec) }
    }

    /// Interval product with an exact rational scalar, rounded outward.
    pub fn mul_rational(&self, r: &Rational, prec: u64) -> Self {
        if r.is_zero() {
            return RealInterval::zero();
        }
        let (a, b) = if r.is_positive() { (&self.lo, &self.hi) } else { (&self.hi, &self.lo) };
        let lo = RealInterval::from_rational(&(a.to_rational() * r), prec).lo;
        let hi = RealInterval::from_rational(&(b.to_rational() * r), prec).hi;
        RealInterval { lo, hi }
    }

    pub fn contains_zero(&self) -> bool {
        let z = Dyadic::zero();
        self.lo <= z && z <= self.hi
    }

    /// `true` only if every point of the interval is `> 0`.
    pub fn guaranteed_positive(&self) -> bool {
        self.lo > Dyadic::zero()
    }

    /// `true` only if every point of the interval is `< 0`.
    pub fn guaranteed_negative(&self) -> bool {
        self.hi < Dyadic::zero()
    }
}

impl std::ops::Add for RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: RealInterval) -> RealInterval {
        RealInterval { lo: self.lo + rhs.lo, hi: self.hi + rhs.hi }
    }
}

impl std::ops::Sub for RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: RealInterval) -> RealInterval {
        RealInterval { lo: self.lo - rhs.hi, hi: self.hi - rhs.lo }
    }
}

impl std::ops::Neg for RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval { lo: -self.hi, hi: -self.lo }
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_f64(), self.hi.to_f64())
    }
}

/// A rectangle `re × im` enclosing a complex number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl fmt::Display for ComplexInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·i", self.re, self.im)
    }
}

/// Bracketing rational enclosure of `arctan(1/x)` for integer `x ≥ 2`,
/// from consecutive partial sums of the alternating Leibniz-type series.
fn arctan_inv_brackets(x: i64, prec: u64) -> (Rational, Rational) {
    let xq = Rational::from_integer(BigInt::from(x));
    let x2 = xq.clone() * xq.clone();
    let threshold = Rational::new(BigInt::one(), BigInt::one() << (prec + 8));
    let mut term = xq.recip(); // 1/x, the k = 0 term magnitude
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let signed = if k % 2 == 0 { term.clone() } else { -term.clone() };
        let next_sum = sum.clone() + signed.clone();
        term = term / x2.clone() * Rational::new(BigInt::from(2 * k + 1), BigInt::from(2 * k + 3));
        if term < threshold {
            // The limit lies between this partial sum and the next one.
            let next_term = if (k + 1) % 2 == 0 { term.clone() } else { -term.clone() };
            let after = next_sum.clone() + next_term;
            return if next_sum < after { (next_sum, after) } else { (after, next_sum) };
        }
        sum = next_sum;
        k += 1;
    }
}

/// Rigorous enclosure of `π` with `prec`-bit endpoints (cached per precision).
pub fn pi_interval(prec: u64) -> RealInterval {
    static CACHE: OnceLock<Mutex<HashMap<u64, RealInterval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&prec) {
        return hit.clone();
    }
    let (a_lo, a_hi) = arctan_inv_brackets(5, prec + 6);
    let (b_lo, b_hi) = arctan_inv_brackets(239, prec + 6);
    let sixteen = Rational::from_integer(BigInt::from(16));
    let four = Rational::from_integer(BigInt::from(4));
    let pi_lo = sixteen.clone() * a_lo - four.clone() * b_hi;
    let pi_hi = sixteen * a_hi - four * b_lo;
    let lo = RealInterval::from_rational(&pi_lo, prec).lo;
    let hi = RealInterval::from_rational(&pi_hi, prec).hi;
    let out = RealInterval::new(lo, hi);
    cache.lock().unwrap().insert(prec, out.clone());
    out
}

/// Taylor evaluation of `cos` (or `sin`) at an exact rational point, with the
/// tail bounded by the first omitted term once the terms are decreasing.
fn taylor_trig(m: &Rational, prec: u64, sine: bool) -> RealInterval {
    let m2 = m.clone() * m.clone();
    let threshold = Rational::new(BigInt::one(), BigInt::one() << (prec + 8));
    // term_k for cos: (−1)^k m^{2k}/(2k)!; for sin: (−1)^k m^{2k+1}/(2k+1)!.
    let mut term = if sine { m.clone() } else { Rational::one() };
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let signed = if k % 2 == 0 { term.clone() } else { -term.clone() };
        sum += signed;
        let (d1, d2) = if sine { (2 * k + 2, 2 * k + 3) } else { (2 * k + 1, 2 * k + 2) };
        term = term * m2.clone() / Rational::from_integer(BigInt::from(d1) * BigInt::from(d2));
        k += 1;
        // Once terms decrease in magnitude, the alternating tail is bounded
        // by the first omitted term. (`term` may be negative for sin of a
        // negative argument, so compare and widen by its absolute value.)
        let decreasing = m2 < Rational::from_integer(BigInt::from(d1) * BigInt::from(d2));
        let tail = term.abs();
        if decreasing && tail < threshold {
            let lo = RealInterval::from_rational(&(sum.clone() - tail.clone()), prec).lo;
            let hi = RealInterval::from_rational(&(sum + tail), prec).hi;
            return RealInterval::new(lo, hi);
        }
    }
}

/// Subtracts the nearest integer multiple of `2π`, returning an interval
/// containing `x − 2πn` (cos/sin are invariant under this shift).
fn reduce_mod_two_pi(x: &Dyadic, prec: u64) -> RealInterval {
    let two_pi = {
        let p = pi_interval(prec + 8);
        RealInterval::new(p.lo.clone() + p.lo.clone(), p.hi.clone() + p.hi.clone())
    };
    let approx = x.to_f64() / (2.0 * std::f64::consts::PI);
    let n = approx.round();
    if !n.is_finite() || n.abs() > 1e15 {
        // Outside any sane range for this crate's callers; give up on
        // reduction and let the Taylor series pay the cost.
        return RealInterval::point(x.clone());
    }
    let n = BigInt::from(n as i64);
    let shift = two_pi.mul_rational(&Rational::from_integer(n), prec + 8);
    RealInterval::point(x.clone()) - shift
}

fn trig_interval(x: &RealInterval, prec: u64, sine: bool) -> RealInterval {
    let work = prec + 8;
    let reduced = reduce_mod_two_pi(&x.midpoint(), work);
    let core = taylor_trig(&reduced.midpoint().to_rational(), work, sine);
    // |cos| and |sin| are 1-Lipschitz: widen by every half-width we dropped.
    let slop = x.width().half() + reduced.width().half();
    let out = core.widen(&slop.round_up(work)).round_out(prec);
    // Clamp to the known range of cos/sin to keep enclosures sane.
    let one = Dyadic::from_i64(1);
    let lo = out.lo.max(-one.clone());
    let hi = out.hi.min(one);
    RealInterval::new(lo, hi)
}

/// Rigorous `cos` over an interval.
pub fn cos_interval(x: &RealInterval, prec: u64) -> RealInterval {
    trig_interval(x, prec, false)
}

/// Rigorous `sin` over an interval.
pub fn sin_interval(x: &RealInterval, prec: u64) -> RealInterval {
    trig_interval(x, prec, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    #[test]
    fn dyadic_normalization_and_order() {
        let a = Dyadic::new(BigInt::from(12), 0); // 3·2²
        assert_eq!(a, Dyadic::new(BigInt::from(3), 2));
        assert!(Dyadic::from_i64(-1) < Dyadic::zero());
        assert!(Dyadic::new(BigInt::from(1), -3) < Dyadic::new(BigInt::from(1), -2));
    }

    #[test]
    fn rounding_is_outward() {
        let x = Dyadic::new(BigInt::from(0b10110111), 0); // 183
        assert!(x.round_down(4) <= x);
        assert!(x.round_up(4) >= x);
        assert!(x.round_down(4).bits() <= 4);
        let neg = -x.clone();
        assert!(neg.round_down(4) <= neg);
        assert!(neg.round_up(4) >= neg);
    }

    #[test]
    fn rational_enclosure_contains_value() {
        let r = rat(1, 3);
        let iv = RealInterval::from_rational(&r, 30);
        assert!(iv.lo.to_rational() <= r && r <= iv.hi.to_rational());
        assert!(iv.width().to_f64() < 1e-8);
    }

    #[test]
    fn pi_matches_reference() {
        let p = pi_interval(80);
        let f = std::f64::consts::PI;
        assert!(p.lo.to_f64() <= f && f <= p.hi.to_f64());
        assert!(p.width().to_f64() < 1e-20);
    }

    #[test]
    fn cos_and_sin_at_simple_angles() {
        let prec = 64;
        let pi = pi_interval(prec);
        // cos π = −1, sin π = 0.
        let c = cos_interval(&pi, prec);
        assert!(c.lo.to_f64() <= -1.0 && c.hi.to_f64() >= -1.0 - 1e-15);
        let s = sin_interval(&pi, prec);
        assert!(s.contains_zero());
        // cos(π/3) = 1/2 exactly.
        let third = pi.mul_rational(&rat(1, 3), prec);
        let c3 = cos_interval(&third, prec);
        let half = rat(1, 2);
        assert!(c3.lo.to_rational() <= half && half <= c3.hi.to_rational());
        assert!(c3.width().to_f64() < 1e-15);
    }

    #[test]
    fn signs_certify_correctly() {
        let prec = 64;
        let pi = pi_interval(prec);
        let quarter = pi.mul_rational(&rat(1, 4), prec);
        assert!(cos_interval(&quarter, prec).guaranteed_positive());
        let three_quarters = pi.mul_rational(&rat(3, 4), prec);
        assert!(cos_interval(&three_quarters, prec).guaranteed_negative());
    }

    #[test]
    fn large_argument_reduction() {
        let prec = 64;
        // cos(100) ≈ 0.8623188722876839.
        let x = RealInterval::point(Dyadic::from_i64(100));
        let c = cos_interval(&x, prec);
        let f = 100f64.cos();
        assert!(c.lo.to_f64() <= f && f <= c.hi.to_f64());
        assert!(c.width().to_f64() < 1e-12);
    }
}
