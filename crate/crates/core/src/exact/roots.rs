use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::QuadPoly;
use super::quad::rat_to_f64;
use crate::error::{Error, Result};

/// Rational interval on which a polynomial changes exact sign.
///
/// A degenerate bracket (`lo == hi`) marks an exact rational root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
    pub poly_id: String,
}

#[derive(Serialize)]
struct BracketJson<'a> {
    poly_id: &'a str,
    lo: f64,
    hi: f64,
    lo_exact: String,
    hi_exact: String,
}

impl Serialize for RootBracket {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BracketJson {
            poly_id: &self.poly_id,
            lo: self.lo_f64(),
            hi: self.hi_f64(),
            lo_exact: self.lo.to_string(),
            hi_exact: self.hi.to_string(),
        }
        .serialize(s)
    }
}

impl RootBracket {
    pub fn lo_f64(&self) -> f64 {
        rat_to_f64(&self.lo)
    }

    pub fn hi_f64(&self) -> f64 {
        rat_to_f64(&self.hi)
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        rat_to_f64(&self.midpoint())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo_f64() <= x && x <= self.hi_f64()
    }
}

/// Bisection on exact signs until the bracket is at most `width` wide.
///
/// Requires `sign P(lo) != sign P(hi)`, both nonzero; a midpoint that is an
/// exact root ends the search with a degenerate bracket.
pub fn isolate_root(
    poly: &QuadPoly,
    poly_id: &str,
    lo: &BigRational,
    hi: &BigRational,
    width: &BigRational,
) -> Result<RootBracket> {
    if width <= &BigRational::zero() || lo >= hi {
        return Err(Error::Config(format!("bad bisection request: [{lo}, {hi}] to width {width}")));
    }
    let s_lo = poly.eval(lo).sign();
    let s_hi = poly.eval(hi).sign();
    if s_lo == 0 || s_hi == 0 || s_lo == s_hi {
        return Err(Error::NoSignChange { what: poly_id.to_string(), lo: lo.to_string(), hi: hi.to_string() });
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while &b - &a > *width {
        let m = (&a + &b) / &two;
        match poly.eval(&m).sign() {
            0 => return Ok(RootBracket { lo: m.clone(), hi: m, poly_id: poly_id.to_string() }),
            s if s == s_lo => a = m,
            _ => b = m,
        }
    }
    Ok(RootBracket { lo: a, hi: b, poly_id: poly_id.to_string() })
}

/// [`isolate_root`] on `(0, 1)`.
pub fn isolate_root_unit(poly: &QuadPoly, poly_id: &str, width: &BigRational) -> Result<RootBracket> {
    isolate_root(poly, poly_id, &BigRational::zero(), &BigRational::one(), width)
}

/// Every sign change of `poly` on the cells `[k/cells, (k+1)/cells]` of
/// `[0, 1]`, each isolated to `width`. Roots of even multiplicity and pairs
/// inside one cell are not seen.
pub fn isolate_roots_grid(poly: &QuadPoly, poly_id: &str, cells: u32, width: &BigRational) -> Result<Vec<RootBracket>> {
    if cells == 0 {
        return Err(Error::Config("grid needs at least one cell".into()));
    }
    let point = |k: u32| BigRational::new(BigInt::from(k), BigInt::from(cells));
    let mut out = Vec::new();
    let mut prev = (point(0), poly.eval(&point(0)).sign());
    if prev.1 == 0 {
        out.push(RootBracket { lo: prev.0.clone(), hi: prev.0.clone(), poly_id: poly_id.to_string() });
    }
    for k in 1..=cells {
        let x = point(k);
        let s = poly.eval(&x).sign();
        if s == 0 {
            out.push(RootBracket { lo: x.clone(), hi: x.clone(), poly_id: poly_id.to_string() });
        } else if prev.1 != 0 && s != prev.1 {
            out.push(isolate_root(poly, poly_id, &prev.0, &x, width)?);
        }
        prev = (x, s);
    }
    Ok(out)
}

/// `1 / 2^k`, the natural widths for dyadic bisection.
pub fn dyadic_width(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k as usize)
}

/// Smallest `2^-k` not exceeding `w`.
pub fn width_from_f64(w: f64) -> BigRational {
    let k = (-w.log2()).ceil().clamp(1.0, 200.0) as u32;
    dyadic_width(k)
}
