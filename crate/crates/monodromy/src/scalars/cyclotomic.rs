//! The cyclotomic fields `Q(ζ_q)`.
//!
//! An element is stored as its coordinate vector in the power basis
//! `1, ζ, …, ζ^{φ(q)−1}`, i.e. as a polynomial in `ζ_q` reduced modulo the
//! `q`-th cyclotomic polynomial `Φ_q`. Because `Φ_q` is irreducible over `Q`
//! this representation is unique, inverses exist for every nonzero element
//! (extended Euclid against `Φ_q`), and an element is rational exactly when
//! its coordinates beyond the constant one vanish.
//!
//! Conjugation is `ζ ↦ ζ^{q−1} = ζ̄`; it is computed through a per-order
//! table of the reduced powers `ζ^0, …, ζ^{q−1}`, which also serves
//! exponentiation of the generator. Elements of different orders never mix,
//! with one exception: rationals (order 1 or recognizably rational values)
//! coerce into any order, so matrix code can freely combine `1`, `−2`, etc.
//! with genuine cyclotomic numbers.
//!
//! [`Cyclotomic::approximate`] returns a rigorous complex rectangle around
//! the value (via the outward-rounded [`dyadic`](super::dyadic) kernel) and
//! [`Cyclotomic::sign_of_real`] certifies the sign of a real element by an
//! exact zero test followed by interval refinement at doubling precision —
//! so a returned sign is a proof, not a float guess.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::dyadic::{cos_interval, pi_interval, sin_interval, ComplexInterval, Dyadic, RealInterval};
use super::poly::Poly;
use super::rational::{rat, Rational};
use super::Scalar;

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "totient of zero");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The `q`-th cyclotomic polynomial `Φ_q`, computed by dividing `x^q − 1`
/// by `Φ_d` for every proper divisor `d | q`, and cached per order.
/// The coefficients are integers (returned over `Q` for arithmetic
/// convenience).
pub fn cyclotomic_poly(q: u64) -> Poly<Rational> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Poly<Rational>>>>> = OnceLock::new();
    fn compute(q: u64, cache: &Mutex<HashMap<u64, Arc<Poly<Rational>>>>) -> Arc<Poly<Rational>> {
        if let Some(hit) = cache.lock().unwrap().get(&q) {
            return hit.clone();
        }
        let mut coeffs = vec![Rational::from_i64(0); q as usize + 1];
        coeffs[0] = Rational::from_i64(-1);
        coeffs[q as usize] = Rational::from_i64(1);
        let mut poly = Poly::from_coeffs(coeffs); // x^q − 1
        for d in divisors(q) {
            if d < q {
                poly = poly.div_exact(&compute(d, cache));
            }
        }
        let arc = Arc::new(poly);
        cache.lock().unwrap().insert(q, arc.clone());
        arc
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    (*compute(q, cache)).clone()
}

/// Per-order arithmetic tables: `Φ_q` and the reduced powers of `ζ_q`.
struct FieldTable {
    degree: usize,
    modulus: Poly<Rational>,
    /// `zeta_pow[j]` = coordinates of `ζ^j` for `j = 0, …, q−1`.
    zeta_pow: Vec<Vec<Rational>>,
}

fn field_table(q: u64) -> Arc<FieldTable> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&q) {
        return hit.clone();
    }
    let modulus = cyclotomic_poly(q);
    let degree = modulus.degree().expect("cyclotomic polynomial is nonzero");
    let mut zeta_pow = Vec::with_capacity(q as usize);
    let mut power = Poly::<Rational>::one();
    let x = Poly::<Rational>::x();
    for _ in 0..q {
        let mut coords: Vec<Rational> = (0..degree).map(|i| power.coeff(i)).collect();
        coords.resize(degree, Rational::from_i64(0));
        zeta_pow.push(coords);
        power = (power * x.clone()).divrem(&modulus).unwrap().1;
    }
    let table = Arc::new(FieldTable { degree, modulus, zeta_pow });
    cache.lock().unwrap().insert(q, table.clone());
    table
}

/// An element of `Q(ζ_q)` in the power basis `1, ζ_q, …, ζ_q^{φ(q)−1}`.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>, // length = φ(order)
}

impl Cyclotomic {
    /// A rational, living in the trivial field `Q(ζ_1) = Q`.
    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { order: 1, coeffs: vec![r] }
    }

    /// The primitive root `ζ_q = e^{2πi/q}`.
    pub fn zeta(q: u64) -> Self {
        Cyclotomic::root_of_unity(q, 1)
    }

    /// `ζ_q^p`, reduced into the power basis of `Q(ζ_q)`.
    pub fn root_of_unity(q: u64, p: u64) -> Self {
        assert!(q >= 1, "root-of-unity order must be positive");
        let table = field_table(q);
        Cyclotomic { order: q, coeffs: table.zeta_pow[(p % q) as usize].clone() }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `Some(r)` iff the element lies in `Q` (all higher coordinates vanish).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn poly(&self) -> Poly<Rational> {
        Poly::from_coeffs(self.coeffs.clone())
    }

    fn from_poly(order: u64, p: Poly<Rational>) -> Self {
        let table = field_table(order);
        let reduced = if p.degree().map_or(false, |d| d >= table.degree) {
            p.divrem(&table.modulus).unwrap().1
        } else {
            p
        };
        let mut coeffs: Vec<Rational> = (0..table.degree).map(|i| reduced.coeff(i)).collect();
        coeffs.resize(table.degree, Rational::from_i64(0));
        Cyclotomic { order, coeffs }
    }

    /// Rewrites a rational element in the basis of `Q(ζ_q)`.
    fn lift_to(&self, order: u64) -> Self {
        if self.order == order {
            return self.clone();
        }
        let r = self
            .as_rational()
            .unwrap_or_else(|| panic!("cannot mix cyclotomic orders {} and {}", self.order, order));
        Cyclotomic::from_poly(order, Poly::constant(r))
    }

    /// Puts two operands into a common field, coercing rationals as needed.
    fn align(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else if other.as_rational().is_some() {
            (self.clone(), other.lift_to(self.order))
        } else {
            (self.lift_to(other.order), other.clone())
        }
    }

    /// Whether the element equals its own conjugate.
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    /// Rigorous complex rectangle containing the value, with roughly
    /// `prec`-bit half-width. The element is a sum `Σ c_i ζ^i` with
    /// `ζ^i = e^{2πi·i/q}`, so each term is enclosed via the interval
    /// `cos`/`sin` at the exact rational angle multiple and the rectangles
    /// are added outward.
    ///
    /// The core enclosure is computed at `2·prec + 16` working bits and then
    /// padded by `±2^{−prec−1}`. The padding dominates the core width, so the
    /// rectangle at `2k` bits is contained in the rectangle at `k` bits and
    /// widths still shrink geometrically as the precision doubles.
    pub fn approximate(&self, prec: u64) -> ComplexInterval {
        assert!(prec >= 4, "approximation precision must be at least 4 bits");
        let work = 2 * prec + 16;
        let pi = pi_interval(work);
        let mut re = RealInterval::zero();
        let mut im = RealInterval::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = pi.mul_rational(&rat(2 * i as i64, self.order as i64), work);
            re = re + cos_interval(&angle, work).mul_rational(c, work);
            im = im + sin_interval(&angle, work).mul_rational(c, work);
        }
        let pad = Dyadic::new(BigInt::from(1), -(prec as i64) - 1);
        ComplexInterval { re: re.widen(&pad).round_out(work), im: im.widen(&pad).round_out(work) }
    }

    /// Certified sign (−1, 0, or 1) of a real cyclotomic number: exact zero
    /// test first, then interval refinement at doubling precision until the
    /// enclosure excludes zero. Terminates because the value is nonzero and
    /// the enclosures shrink. Panics if the element is not real.
    pub fn sign_of_real(&self) -> i32 {
        assert!(self.is_real(), "sign_of_real on a non-real element");
        if Scalar::is_zero(self) {
            return 0;
        }
        let mut prec = 32;
        loop {
            let re = self.approximate(prec).re;
            if re.guaranteed_positive() {
                return 1;
            }
            if re.guaranteed_negative() {
                return -1;
            }
            prec *= 2;
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl std::ops::Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.align(&rhs);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x.clone() + y.clone())
            .collect();
        Cyclotomic { order: a.order, coeffs }
    }
}

impl std::ops::Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl std::ops::Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        let (a, b) = self.align(&rhs);
        Cyclotomic::from_poly(a.order, a.poly() * b.poly())
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(Rational::from_i64(0))
    }

    fn one() -> Self {
        Cyclotomic::from_rational(Rational::from_i64(1))
    }

    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from_i64(n))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Extended Euclid against `Φ_q`: since `Φ_q` is irreducible, any nonzero
    /// residue is coprime to it, giving `u·a + v·Φ_q = 1` and `a⁻¹ = u`.
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        let table = field_table(self.order);
        let (mut r0, mut r1) = (table.modulus.clone(), self.poly());
        let (mut u0, mut u1) = (Poly::<Rational>::zero(), Poly::<Rational>::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let u = u0 - q * u1.clone();
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        // r0 = gcd (a nonzero constant); scale the cofactor to make it 1.
        let c = r0.coeff(0).inv().expect("gcd with irreducible modulus is a unit");
        Some(Cyclotomic::from_poly(self.order, u0.scale(&c)))
    }

    /// Complex conjugation `ζ ↦ ζ^{q−1}`.
    fn conjugate(&self) -> Self {
        let table = field_table(self.order);
        let q = self.order;
        let mut coeffs = vec![Rational::from_i64(0); table.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let j = ((q - i as u64 % q) % q) as usize;
            for (k, basis) in table.zeta_pow[j].iter().enumerate() {
                coeffs[k] += c.clone() * basis.clone();
            }
        }
        Cyclotomic { order: q, coeffs }
    }

    fn div_nat(&self, n: u64) -> Self {
        assert!(n != 0, "division by zero natural");
        let d = Rational::from_integer(BigInt::from(n));
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c / d.clone()).collect(),
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        write!(f, "{}", self.poly().display_with(&format!("ζ{}", self.order)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(q: u64, p: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(q, p)
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(20), 8);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(prime_factors(60), vec![2, 3, 5]);
    }

    #[test]
    fn cyclotomic_polynomials_match_references() {
        // Φ₁ = x − 1, Φ₂ = x + 1, Φ₄ = x² + 1, Φ₆ = x² − x + 1,
        // Φ₁₂ = x⁴ − x² + 1.
        assert_eq!(cyclotomic_poly(1), Poly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), Poly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), Poly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), Poly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), Poly::from_i64(&[1, 0, -1, 0, 1]));
        // Φ₁₀₅ is the first with a coefficient of magnitude 2.
        let p105 = cyclotomic_poly(105);
        assert_eq!(p105.degree(), Some(euler_phi(105) as usize));
        assert_eq!(p105.coeff(7), Rational::from_i64(-2));
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for q in 1..=16u64 {
            let zq = z(q, 1);
            assert!(zq.pow_u(q).is_one(), "ζ_{q}^{q} ≠ 1");
            for m in 1..q {
                assert!(!zq.pow_u(m).is_one(), "ζ_{q}^{m} = 1 prematurely");
            }
        }
    }

    #[test]
    fn field_axioms_spot_checks() {
        let a = z(5, 1) + z(5, 3);
        let b = z(5, 2) - Cyclotomic::from_i64(3);
        let c = z(5, 4);
        assert_eq!(
            (a.clone() + b.clone()) * c.clone(),
            a.clone() * c.clone() + b.clone() * c.clone()
        );
        let ai = a.inv().unwrap();
        assert!((a * ai).is_one());
        assert_eq!(Scalar::inv(&Cyclotomic::zero()), None);
    }

    #[test]
    fn rational_coercion_across_orders() {
        let one_q = Cyclotomic::one();
        let one_8 = z(8, 0);
        assert_eq!(one_q, one_8);
        let x = z(8, 1) + Cyclotomic::from_i64(2);
        assert_eq!(x.clone() - Cyclotomic::from_i64(2), z(8, 1));
    }

    #[test]
    #[should_panic(expected = "cannot mix cyclotomic orders")]
    fn mixing_nontrivial_orders_panics() {
        let _ = z(5, 1) + z(7, 1);
    }

    #[test]
    fn conjugation_is_an_involution_and_fixes_rationals() {
        let x = z(12, 1) + z(12, 5).div_nat(3);
        assert_eq!(x.conjugate().conjugate(), x);
        assert_eq!(Cyclotomic::from_rational(rat(22, 7)).conjugate().as_rational(), Some(rat(22, 7)));
        // ζ̄ = ζ^{q−1}.
        assert_eq!(z(12, 1).conjugate(), z(12, 11));
    }

    #[test]
    fn norm_is_real_and_positive() {
        let x = z(7, 1) + z(7, 2) - Cyclotomic::from_i64(1);
        let n = x.clone() * x.conjugate();
        assert!(n.is_real());
        assert_eq!(n.sign_of_real(), 1);
    }

    #[test]
    fn real_and_imaginary_detection() {
        let real = z(5, 1) + z(5, 4); // 2cos(2π/5)
        assert!(real.is_real());
        assert!(!z(5, 1).is_real());
        assert_eq!(real.sign_of_real(), 1); // ≈ 0.618
        let negative = z(5, 2) + z(5, 3); // 2cos(4π/5) ≈ −1.618
        assert_eq!(negative.sign_of_real(), -1);
        assert_eq!(Cyclotomic::zero().sign_of_real(), 0);
    }

    #[test]
    fn approximation_encloses_known_values() {
        // ζ₆ = 1/2 + (√3/2)i.
        let x = z(6, 1).approximate(64);
        let half = rat(1, 2);
        assert!(x.re.lo().to_rational() <= half && half <= x.re.hi().to_rational());
        let imag = 3f64.sqrt() / 2.0;
        assert!(x.im.lo().to_f64() <= imag && imag <= x.im.hi().to_f64());
        assert!(x.re.width().to_f64() < 1e-15);
    }

    #[test]
    fn approximations_nest_as_precision_doubles() {
        let x = z(7, 1) + z(7, 3).div_nat(2) - Cyclotomic::from_i64(1);
        let coarse = x.approximate(16);
        let fine = x.approximate(32);
        assert!(coarse.re.lo() <= fine.re.lo() && fine.re.hi() <= coarse.re.hi());
        assert!(coarse.im.lo() <= fine.im.lo() && fine.im.hi() <= coarse.im.hi());
        assert!(fine.re.width() < coarse.re.width());
    }

    #[test]
    fn inverse_of_one_minus_zeta4() {
        // 1/(1 − i) = (1 + i)/2.
        let one_minus = Cyclotomic::one() - z(4, 1);
        let inv = one_minus.inv().unwrap();
        let expected = (Cyclotomic::one() + z(4, 1)).div_nat(2);
        assert_eq!(inv, expected);
    }
}
