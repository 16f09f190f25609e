//! Exact arithmetic in the real quadratic field Q(sqrt 17).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The squarefree radicand of the field.
pub const RADICAND: i64 = 17;

/// `p + q * sqrt(17)` with rational `p`, `q` (kept in lowest terms by `BigRational`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    pub p: BigRational,
    pub q: BigRational,
}

fn radicand() -> BigRational {
    BigRational::from_integer(BigInt::from(RADICAND))
}

impl QuadExt {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        Self { p, q }
    }

    pub fn from_ints(p: i64, q: i64) -> Self {
        Self::new(BigRational::from_integer(p.into()), BigRational::from_integer(q.into()))
    }

    /// `mult * (p + q sqrt 17)`, the shape every displayed coefficient takes.
    pub fn scaled(mult: i64, p: i64, q: i64) -> Self {
        Self::from_ints(mult * p, mult * q)
    }

    pub fn rational(x: BigRational) -> Self {
        Self::new(x, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn sqrt17() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.p.clone(), -self.q.clone())
    }

    /// Field norm `p^2 - 17 q^2`.
    pub fn norm(&self) -> BigRational {
        &self.p * &self.p - radicand() * &self.q * &self.q
    }

    /// Exact sign of `p + q sqrt 17`, by comparing `p^2` with `17 q^2`.
    pub fn sign(&self) -> i8 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sp == sq || sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        // opposite signs: the larger magnitude wins
        match (&self.p * &self.p).cmp(&(radicand() * &self.q * &self.q)) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ExactZeroDivision("inverse of zero in Q(sqrt 17)"));
        }
        Ok(Self::new(&self.p / &n, -&self.q / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Nearest-ish `f64`. When `p` and `q sqrt 17` nearly cancel the value is
    /// computed as `norm / (p - q sqrt 17)`, where no cancellation occurs.
    pub fn to_f64(&self) -> f64 {
        let s17 = (RADICAND as f64).sqrt();
        if sign_of(&self.p) * sign_of(&self.q) >= 0 {
            return rat_to_f64(&self.p) + rat_to_f64(&self.q) * s17;
        }
        let denom = rat_to_f64(&self.p) - rat_to_f64(&self.q) * s17;
        rat_to_f64(&self.norm()) / denom
    }
}

fn sign_of(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Rational to `f64` without overflowing on huge numerators and denominators.
pub fn rat_to_f64(x: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (x.numer().to_f64(), x.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 1e300 && d < 1e300 {
            return n / d;
        }
    }
    // scale both down by a common power of two
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let shift = (nb.max(db) - 900).max(0) as usize;
    let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (x.denom() >> shift).to_f64().unwrap_or(0.0);
    if d == 0.0 {
        // denominator underflowed after shifting: |x| is huge
        let sh = db.max(0) as usize;
        return (x.numer() >> sh).to_f64().unwrap_or(f64::INFINITY);
    }
    n / d
}

/// Exact rational from a finite `f64`.
pub fn rat_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "{}*sqrt17", self.q),
            (false, false) if self.q.is_negative() => write!(f, "{} - {}*sqrt17", self.p, -self.q.clone()),
            _ => write!(f, "{} + {}*sqrt17", self.p, self.q),
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.p + &o.p, &self.q + &o.q)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(&self.p - &o.p, &self.q - &o.q)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, o: &QuadExt) -> QuadExt {
        QuadExt::new(
            &self.p * &o.p + radicand() * &self.q * &o.q,
            &self.p * &o.q + &self.q * &o.p,
        )
    }
}

impl<'a> Mul<&'a BigRational> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, t: &BigRational) -> QuadExt {
        QuadExt::new(&self.p * t, &self.q * t)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        &self + &o
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        &self - &o
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        &self * &o
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.p, -self.q)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.p.clone(), -self.q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(QuadExt::from_ints(0, 0).sign(), 0);
        assert_eq!(QuadExt::from_ints(-4, 1).sign(), 1);
        assert_eq!(QuadExt::from_ints(4, -1).sign(), -1);
        assert_eq!(QuadExt::from_ints(-5, 1).sign(), -1);
        assert_eq!(QuadExt::from_ints(3, 2).sign(), 1);
        assert_eq!(QuadExt::from_ints(0, -2).sign(), -1);
        // 169479^2 = 28723131441 < 17 * 41105^2 = 28723557425
        assert_eq!(QuadExt::from_ints(-169479, 41105).sign(), 1);
    }

    #[test]
    fn inverse_round_trip() {
        let x = QuadExt::from_ints(7, -3);
        assert_eq!(&x * &x.inverse().unwrap(), QuadExt::one());
        assert!(QuadExt::zero().inverse().is_err());
    }

    #[test]
    fn cancelling_value_is_accurate() {
        // -169479 + 41105 sqrt 17 is a small positive residue; naive evaluation loses ~8 digits
        let x = QuadExt::from_ints(-169479, 41105);
        let v = x.to_f64();
        let want = (28723131441.0f64 - 28723557425.0) / (-169479.0 - 41105.0 * 17f64.sqrt());
        assert!((v - want).abs() <= 1e-18);
        assert!(v > 0.0);
    }

    #[test]
    fn sqrt17_squares_to_17() {
        let s = QuadExt::sqrt17();
        assert_eq!(&s * &s, QuadExt::from_ints(17, 0));
    }

    #[test]
    fn huge_rationals_convert() {
        let big = BigRational::new(BigInt::from(3) << 2000usize, BigInt::from(2) << 2000usize);
        assert_eq!(rat_to_f64(&big), 1.5);
    }
}
