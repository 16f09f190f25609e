//! Sharp-radius equations and a bracketing solver.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A radius equation `g(r) = 0` with one sign change on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusEquation {
    /// `2(1+r) r^N - (1-r)^2`
    RogosinskiRN(u32),
    /// `(1+r) r^N - (1-r)^2`
    RogosinskiRpN(u32),
    /// `2r^2 + 3r - 1`
    ThmCQuadratic,
    /// `(1-a)((1+2a) r - 1)`: where the Bohr sum of `f_a` crosses 1.
    BohrClassical(f64),
}

impl RadiusEquation {
    /// Builds an equation from its CLI name.
    pub fn from_name(name: &str, n: Option<u32>, a: Option<f64>) -> Result<Self> {
        let need_n = || n.ok_or_else(|| Error::Config(format!("equation {name} needs --N")));
        match name {
            "rogosinski_RN" => Ok(RadiusEquation::RogosinskiRN(need_n()?)),
            "rogosinski_RpN" => Ok(RadiusEquation::RogosinskiRpN(need_n()?)),
            "thmC_quadratic" => Ok(RadiusEquation::ThmCQuadratic),
            "bohr_classical" => {
                Ok(RadiusEquation::BohrClassical(a.ok_or_else(|| Error::Config("bohr_classical needs --a".into()))?))
            }
            _ => Err(Error::UnknownName { kind: "equation", value: name.to_string() }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RadiusEquation::RogosinskiRN(_) => "rogosinski_RN",
            RadiusEquation::RogosinskiRpN(_) => "rogosinski_RpN",
            RadiusEquation::ThmCQuadratic => "thmC_quadratic",
            RadiusEquation::BohrClassical(_) => "bohr_classical",
        }
    }

    pub fn eval(&self, r: f64) -> f64 {
        let s = (1.0 - r) * (1.0 - r);
        match *self {
            RadiusEquation::RogosinskiRN(n) => 2.0 * (1.0 + r) * r.powi(n as i32) - s,
            RadiusEquation::RogosinskiRpN(n) => (1.0 + r) * r.powi(n as i32) - s,
            RadiusEquation::ThmCQuadratic => (2.0 * r + 3.0) * r - 1.0,
            RadiusEquation::BohrClassical(a) => (1.0 - a) * ((1.0 + 2.0 * a) * r - 1.0),
        }
    }

    pub fn derivative(&self, r: f64) -> f64 {
        let ds = 2.0 * (1.0 - r);
        let pow = |n: u32| r.powi(n as i32);
        let dpow = |n: u32| if n == 0 { 0.0 } else { n as f64 * r.powi(n as i32 - 1) };
        match *self {
            RadiusEquation::RogosinskiRN(n) => 2.0 * pow(n) + 2.0 * (1.0 + r) * dpow(n) + ds,
            RadiusEquation::RogosinskiRpN(n) => pow(n) + (1.0 + r) * dpow(n) + ds,
            RadiusEquation::ThmCQuadratic => 4.0 * r + 3.0,
            RadiusEquation::BohrClassical(a) => (1.0 - a) * (1.0 + 2.0 * a),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RadiusEquation::RogosinskiRN(0) | RadiusEquation::RogosinskiRpN(0) => {
                Err(Error::ParameterOutOfRange { name: "N", value: 0.0, range: ">= 1" })
            }
            RadiusEquation::BohrClassical(a) if !(0.0..1.0).contains(&a) => {
                Err(Error::ParameterOutOfRange { name: "a", value: a, range: "[0, 1)" })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RadiusEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusEquation::RogosinskiRN(n) | RadiusEquation::RogosinskiRpN(n) => write!(f, "{}({n})", self.name()),
            RadiusEquation::BohrClassical(a) => write!(f, "{}({a})", self.name()),
            RadiusEquation::ThmCQuadratic => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusSolution {
    pub root: f64,
    pub residual: f64,
    pub bracket: [f64; 2],
}

/// Bisection on `[0, 1]` until the bracket is narrower than `tol`.
pub fn solve_radius(eq: RadiusEquation, tol: f64) -> Result<RadiusSolution> {
    if !(tol > 0.0) {
        return Err(Error::ParameterOutOfRange { name: "tol", value: tol, range: "> 0" });
    }
    eq.validate()?;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let (g_lo, g_hi) = (eq.eval(lo), eq.eval(hi));
    for (x, g) in [(lo, g_lo), (hi, g_hi)] {
        if g == 0.0 {
            return Ok(RadiusSolution { root: x, residual: 0.0, bracket: [x, x] });
        }
    }
    if g_lo.signum() == g_hi.signum() {
        return Err(Error::NoSignChange { what: eq.to_string(), lo: "0".into(), hi: "1".into() });
    }
    let s_lo = g_lo.signum();
    while hi - lo > tol {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        let g = eq.eval(m);
        if g == 0.0 {
            lo = m;
            hi = m;
            break;
        }
        if g.signum() == s_lo {
            lo = m;
        } else {
            hi = m;
        }
    }
    let root = 0.5 * (lo + hi);
    Ok(RadiusSolution { root, residual: eq.eval(root), bracket: [lo, hi] })
}

/// `1/(1+2a)`, the radius where the Bohr sum of `f_a` reaches 1.
pub fn bohr_radius_extremal(a: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::ParameterOutOfRange { name: "a", value: a, range: "[0, 1)" });
    }
    Ok(1.0 / (1.0 + 2.0 * a))
}
