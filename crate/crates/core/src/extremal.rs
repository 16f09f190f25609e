//! Sharp constants recovered by optimizing over `f_a(z) = (a - z)/(1 - a z)`.
//!
//! For each kind, the left side of the inequality evaluated on `f_a` at the
//! worst point `z = -r` has a closed form. Its quadratic area term has
//! coefficient `const`; solving for the largest admissible `const` at each
//! `a` and minimizing over `a` gives the sharp constant. The exact
//! polynomials in [`crate::exact`] serve as an independent cross-check.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    displayed, isolate_roots_grid, polynomial, rat_from_f64, stationarity_constant, thmf_lambda1, thmf_lambda2,
    width_from_f64, PolyId, RootBracket, Source, StationarityKind,
};
use crate::tolerances::{AREA_COEFF, BOHR_RADIUS, CRITICAL_RADIUS};

pub const DEFAULT_GRID: usize = 2048;
pub const DEFAULT_REFINE_TOL: f64 = 1e-10;

/// Agreement required between the optimization route and the exact route.
pub const CROSS_CHECK_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SharpKind {
    /// Quadratic coefficient of `S_r/pi` at `r = (sqrt17 - 3)/4`.
    #[serde(rename = "lambda_thm21")]
    LambdaThm21,
    /// Quadratic coefficient of `S_r/(pi - S_r)` at the same radius.
    #[serde(rename = "mu_thm22")]
    MuThm22,
    /// `B_0 + (16/9) S_r/pi + lambda_1 (S_r/pi)^2` at `r = 1/3`.
    #[serde(rename = "lambda1_thmF")]
    Lambda1ThmF,
    /// `|f|^2 + B_1 + (16/9) S_r/pi + lambda_2 (S_r/pi)^2` at `r = 1/3`.
    #[serde(rename = "lambda2_thmF")]
    Lambda2ThmF,
}

impl SharpKind {
    pub const ALL: [SharpKind; 4] =
        [SharpKind::LambdaThm21, SharpKind::MuThm22, SharpKind::Lambda1ThmF, SharpKind::Lambda2ThmF];

    pub fn name(self) -> &'static str {
        match self {
            SharpKind::LambdaThm21 => "lambda_thm21",
            SharpKind::MuThm22 => "mu_thm22",
            SharpKind::Lambda1ThmF => "lambda1_thmF",
            SharpKind::Lambda2ThmF => "lambda2_thmF",
        }
    }

    /// Radius at which the inequality is sharp.
    pub fn radius(self) -> f64 {
        match self {
            SharpKind::LambdaThm21 | SharpKind::MuThm22 => CRITICAL_RADIUS,
            SharpKind::Lambda1ThmF | SharpKind::Lambda2ThmF => BOHR_RADIUS,
        }
    }

    fn linear_coeff(self) -> f64 {
        match self {
            SharpKind::LambdaThm21 | SharpKind::MuThm22 => AREA_COEFF,
            SharpKind::Lambda1ThmF | SharpKind::Lambda2ThmF => 16.0 / 9.0,
        }
    }

    /// Printed root polynomial, if there is one.
    pub fn root_poly(self) -> PolyId {
        match self {
            SharpKind::LambdaThm21 => PolyId::Psi1,
            SharpKind::MuThm22 => PolyId::Psi2,
            SharpKind::Lambda1ThmF => PolyId::ThmfQuintic,
            SharpKind::Lambda2ThmF => PolyId::ThmfQuartic,
        }
    }

    /// Closed-form value of the constant as a function of the root.
    pub fn exact_constant(self, a: &BigRational) -> Result<f64> {
        match self {
            SharpKind::LambdaThm21 => stationarity_constant(StationarityKind::Lambda, a),
            SharpKind::MuThm22 => stationarity_constant(StationarityKind::Mu, a),
            SharpKind::Lambda1ThmF => thmf_lambda1(a),
            SharpKind::Lambda2ThmF => thmf_lambda2(a),
        }
    }
}

impl fmt::Display for SharpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SharpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SharpKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "constant kind", value: s.to_string() })
    }
}

fn check_a(a: f64) -> Result<()> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::ParameterOutOfRange { name: "a", value: a, range: "[0, 1)" });
    }
    Ok(())
}

/// The area quantity multiplying `const`, before squaring: `S_r/pi` for
/// `f_a`, or `S_r/(pi - S_r)` for the odds form.
pub fn area_weight(kind: SharpKind, a: f64, r: f64) -> f64 {
    let b = 1.0 - a * a;
    let r2 = r * r;
    match kind {
        SharpKind::MuThm22 => b * b * r2 / ((1.0 - r2) * (1.0 - r2 * a.powi(4))),
        _ => {
            let d = 1.0 - a * a * r2;
            b * b * r2 / (d * d)
        }
    }
}

/// Left side of the `kind` inequality for `f_a` at `z = -r`, with quadratic
/// coefficient `constant`.
pub fn boundary_majorant_at(kind: SharpKind, a: f64, constant: f64, r: f64) -> Result<f64> {
    check_a(a)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange(r));
    }
    let b = 1.0 - a * a;
    let w = area_weight(kind, a, r);
    let modulus = (r + a) / (1.0 + r * a);
    let head = match kind {
        SharpKind::LambdaThm21 | SharpKind::MuThm22 => {
            let derivative = r * b / ((1.0 + a * r) * (1.0 + a * r));
            // B_2 + A(f_0, r) collapses to this for f_a
            let refined_tail = b * r * r / (1.0 - r);
            modulus + derivative + refined_tail
        }
        SharpKind::Lambda1ThmF => a + b * r / (1.0 - a * r),
        SharpKind::Lambda2ThmF => modulus * modulus + b * r / (1.0 - a * r),
    };
    Ok(head + kind.linear_coeff() * w + constant * w * w)
}

/// [`boundary_majorant_at`] at the sharp radius of `kind`.
pub fn boundary_majorant(kind: SharpKind, a: f64, constant: f64) -> Result<f64> {
    boundary_majorant_at(kind, a, constant, kind.radius())
}

/// Largest `const` keeping the majorant of `f_a` at most 1.
pub fn admissible_constant(kind: SharpKind, a: f64) -> Result<f64> {
    let free = boundary_majorant(kind, a, 0.0)?;
    let w = area_weight(kind, a, kind.radius());
    Ok((1.0 - free) / (w * w))
}

/// Grid minimum of the admissible constant refined by golden-section search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub value: f64,
    pub argmin: f64,
    /// Strict local minima seen on the grid; 1 for a unimodal curve.
    pub local_minima: usize,
}

pub fn minimize_admissible(kind: SharpKind, grid: usize, refine_tol: f64) -> Result<Minimum> {
    if grid < 100 {
        return Err(Error::ParameterOutOfRange { name: "grid", value: grid as f64, range: ">= 100" });
    }
    if !(refine_tol > 0.0) {
        return Err(Error::ParameterOutOfRange { name: "refine_tol", value: refine_tol, range: "> 0" });
    }
    let h = 1.0 / grid as f64;
    let values = (1..grid).map(|i| admissible_constant(kind, i as f64 * h)).collect::<Result<Vec<_>>>()?;
    let local_minima = values.windows(3).filter(|w| w[1] < w[0] && w[1] < w[2]).count();
    let best = values.iter().enumerate().min_by(|x, y| x.1.total_cmp(y.1)).map(|(i, _)| i + 1).unwrap_or(1);
    let lo = (best - 1) as f64 * h;
    let hi = ((best + 1) as f64 * h).min(1.0 - f64::EPSILON);
    let f = |a: f64| admissible_constant(kind, a).unwrap_or(f64::INFINITY);
    let argmin = golden_section(f, lo, hi, refine_tol);
    Ok(Minimum { value: f(argmin), argmin, local_minima })
}

/// Golden-section search for a minimum of a unimodal `f` on `[lo, hi]`.
pub fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        }
        if x1 >= x2 {
            break;
        }
    }
    if f1 <= f2 { x1 } else { x2 }
}

/// Optimized constant together with the residuals of the exact route.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpConstant {
    pub kind: SharpKind,
    pub value: f64,
    pub argmin_a: f64,
    /// `|value - closed-form constant at argmin_a|`.
    pub residual_stationarity: f64,
    /// `|argmin_a - nearest root of the printed polynomial|`.
    pub residual_exact_root: Option<f64>,
    /// Same against the polynomial rebuilt from its ingredients.
    pub residual_derived_root: Option<f64>,
    pub exact_root: Option<RootBracket>,
    pub derived_root: Option<RootBracket>,
    /// Closed-form constant evaluated at the printed polynomial's root.
    pub exact_route_value: Option<f64>,
    pub local_minima: usize,
}

/// Disagreement between the optimization route and the printed polynomials.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TranscriptionFinding {
    pub kind: SharpKind,
    pub poly_id: String,
    pub detail: String,
}

fn nearest_root(roots: Vec<RootBracket>, a: f64) -> Option<RootBracket> {
    roots.into_iter().min_by(|x, y| (x.midpoint_f64() - a).abs().total_cmp(&(y.midpoint_f64() - a).abs()))
}

/// Root of `id` (from `source`) nearest to `a`, isolated to `2^-40`.
fn root_near(id: PolyId, source: Source, a: f64) -> Result<Option<RootBracket>> {
    let poly = match source {
        Source::Displayed => displayed(id),
        Source::Derived => match polynomial(id, Source::Derived) {
            Some(p) => p,
            None => return Ok(None),
        },
    };
    let label = format!("{}:{}", id.name(), source.name());
    let roots = isolate_roots_grid(&poly, &label, 64, &width_from_f64(1e-12))?;
    Ok(nearest_root(roots, a))
}

pub fn sharp_constant(kind: SharpKind, grid: usize, refine_tol: f64) -> Result<SharpConstant> {
    let m = minimize_admissible(kind, grid, refine_tol)?;
    let residual_stationarity = (m.value - kind.exact_constant(&rat_from_f64(m.argmin))?).abs();

    let exact_root = root_near(kind.root_poly(), Source::Displayed, m.argmin)?;
    let derived_root = match kind {
        SharpKind::LambdaThm21 | SharpKind::MuThm22 => root_near(kind.root_poly(), Source::Derived, m.argmin)?,
        _ => None,
    };
    let residual = |b: &Option<RootBracket>| b.as_ref().map(|b| (b.midpoint_f64() - m.argmin).abs());
    let exact_route_value = match &exact_root {
        Some(b) => kind.exact_constant(&b.midpoint()).ok(),
        None => None,
    };
    Ok(SharpConstant {
        kind,
        value: m.value,
        argmin_a: m.argmin,
        residual_stationarity,
        residual_exact_root: residual(&exact_root),
        residual_derived_root: residual(&derived_root),
        exact_root,
        derived_root,
        exact_route_value,
        local_minima: m.local_minima,
    })
}

impl SharpConstant {
    /// A finding when the printed polynomial disagrees with the optimization route.
    pub fn cross_check(&self) -> Option<TranscriptionFinding> {
        let poly_id = self.kind.root_poly().name().to_string();
        let detail = match (self.residual_exact_root, self.exact_route_value) {
            (None, _) => "printed polynomial has no sign change on (0, 1)".to_string(),
            (Some(dr), v) if dr > CROSS_CHECK_TOL || v.is_none_or(|v| (v - self.value).abs() > CROSS_CHECK_TOL) => {
                let mut d = format!(
                    "nearest printed root {:.12} is {:.3e} from argmin {:.12}",
                    self.exact_root.as_ref().map(|b| b.midpoint_f64()).unwrap_or(f64::NAN),
                    dr,
                    self.argmin_a
                );
                if let Some(v) = v {
                    d.push_str(&format!("; constant there {v:.10} vs {:.10}", self.value));
                }
                if let Some(dd) = self.residual_derived_root {
                    d.push_str(&format!("; rebuilt polynomial root is {dd:.3e} from argmin"));
                }
                d
            }
            _ => return None,
        };
        Some(TranscriptionFinding { kind: self.kind, poly_id, detail })
    }
}

/// `boundary_majorant(kind, argmin, sharp + excess) - 1`; positive when the
/// enlarged constant breaks the inequality on `f_a`.
pub fn sharpness_probe(kind: SharpKind, excess: f64) -> Result<f64> {
    if !(excess > 0.0) {
        return Err(Error::ParameterOutOfRange { name: "excess", value: excess, range: "> 0" });
    }
    let m = minimize_admissible(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL)?;
    probe_at(kind, m.argmin, m.value + excess)
}

/// `boundary_majorant(kind, a, constant) - 1`.
pub fn probe_at(kind: SharpKind, a: f64, constant: f64) -> Result<f64> {
    Ok(boundary_majorant(kind, a, constant)? - 1.0)
}

/// Largest `boundary_majorant(kind, a, constant) - 1` over `a = k/n`, `k < n`,
/// with the `a` where it occurs.
pub fn validity_margin(kind: SharpKind, constant: f64, n: usize) -> Result<(f64, f64)> {
    let mut worst = (f64::NEG_INFINITY, 0.0);
    for k in 0..n {
        let a = k as f64 / n as f64;
        let m = boundary_majorant(kind, a, constant)? - 1.0;
        if m > worst.0 {
            worst = (m, a);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::{thm_d_lhs, RadialSums};
    use crate::series::moebius_series;
    use num_complex::Complex64;

    #[test]
    fn majorant_tends_to_one_as_a_tends_to_one() {
        for kind in SharpKind::ALL {
            let m = boundary_majorant(kind, 1.0 - 1e-9, 20.0).unwrap();
            assert!((m - 1.0).abs() < 1e-7, "{kind}: {m}");
        }
        assert!(boundary_majorant(SharpKind::LambdaThm21, 1.0, 0.0).is_err());
    }

    #[test]
    fn majorant_matches_series_evaluation() {
        let r = CRITICAL_RADIUS;
        let f = moebius_series(0.5, 256).unwrap();
        let z = Complex64::new(-r, 0.0);
        let q = area_weight(SharpKind::LambdaThm21, 0.5, r);
        let via_series = thm_d_lhs(&f, z).unwrap().hi + AREA_COEFF * q;
        let closed = boundary_majorant(SharpKind::LambdaThm21, 0.5, 0.0).unwrap();
        assert!((via_series - closed).abs() < 1e-14, "{via_series} vs {closed}");

        let sums = RadialSums::new(&f, r, 2).unwrap();
        assert!((sums.area_ratio.hi - q).abs() < 1e-15);
        let w = area_weight(SharpKind::MuThm22, 0.5, r);
        assert!((sums.area_odds().unwrap().hi - w).abs() < 1e-15);
    }

    #[test]
    fn theorem_f_majorants_match_series() {
        let r = BOHR_RADIUS;
        let f = moebius_series(0.4, 256).unwrap();
        let sums = RadialSums::new(&f, r, 2).unwrap();
        let q = sums.area_ratio.hi;
        let m1 = sums.bohr[0].hi + 16.0 / 9.0 * q;
        assert!((m1 - boundary_majorant(SharpKind::Lambda1ThmF, 0.4, 0.0).unwrap()).abs() < 1e-14);
        let modulus = f.eval(Complex64::new(-r, 0.0)).norm();
        let m2 = modulus * modulus + sums.bohr[1].hi + 16.0 / 9.0 * q;
        assert!((m2 - boundary_majorant(SharpKind::Lambda2ThmF, 0.4, 0.0).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn admissible_curves_have_one_interior_minimum() {
        for kind in SharpKind::ALL {
            let m = minimize_admissible(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL).unwrap();
            assert_eq!(m.local_minima, 1, "{kind}");
            assert!(m.argmin > 0.05 && m.argmin < 0.95);
            let h = 1e-3;
            let f = |a| admissible_constant(kind, a).unwrap();
            assert!(f(m.argmin - h) + f(m.argmin + h) - 2.0 * f(m.argmin) > 0.0);
            assert!(f(0.01) > m.value && f(0.99) > m.value);
        }
    }

    #[test]
    fn constants_match_independent_brute_force() {
        // plain scan at 1e-6 spacing around the grid minimum, no golden section
        for kind in SharpKind::ALL {
            let m = minimize_admissible(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL).unwrap();
            let brute = (0..20001)
                .map(|k| m.argmin - 0.01 + k as f64 * 1e-6)
                .map(|a| admissible_constant(kind, a).unwrap())
                .fold(f64::INFINITY, f64::min);
            assert!(m.value <= brute + 1e-12 && brute - m.value < 1e-9, "{kind}: {} vs {brute}", m.value);
        }
    }

    #[test]
    fn sharp_constant_satisfies_validity_grid() {
        for kind in SharpKind::ALL {
            let m = minimize_admissible(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL).unwrap();
            let (worst, _) = validity_margin(kind, m.value, 10_000).unwrap();
            assert!(worst <= 1e-9, "{kind}: {worst}");
        }
    }

    #[test]
    fn majorant_increases_with_radius() {
        let lambda = minimize_admissible(SharpKind::LambdaThm21, DEFAULT_GRID, DEFAULT_REFINE_TOL).unwrap().value;
        for i in 1..10 {
            let a = i as f64 / 10.0;
            let mut prev = boundary_majorant_at(SharpKind::LambdaThm21, a, lambda, 0.0).unwrap();
            for k in 1..=200 {
                let r = CRITICAL_RADIUS * k as f64 / 200.0;
                let v = boundary_majorant_at(SharpKind::LambdaThm21, a, lambda, r).unwrap();
                assert!(v >= prev, "a={a} r={r}");
                prev = v;
            }
        }
    }

    #[test]
    fn probe_is_linear_in_the_excess() {
        let m = minimize_admissible(SharpKind::LambdaThm21, DEFAULT_GRID, DEFAULT_REFINE_TOL).unwrap();
        let q = area_weight(SharpKind::LambdaThm21, m.argmin, CRITICAL_RADIUS);
        let p = sharpness_probe(SharpKind::LambdaThm21, 0.1).unwrap();
        assert!((p - 0.1 * q * q).abs() < 1e-12, "{p}");
        assert!(sharpness_probe(SharpKind::MuThm22, 0.1).unwrap() > 0.0);
        assert!(sharpness_probe(SharpKind::LambdaThm21, 1e-6).unwrap() > 0.0);
        assert!(sharpness_probe(SharpKind::LambdaThm21, 0.0).is_err());
    }

    #[test]
    fn published_lambda_is_an_equality_at_the_argmin() {
        let v = boundary_majorant(SharpKind::LambdaThm21, 0.600976, 18.0215).unwrap();
        assert!((v - 1.0).abs() < 1e-3, "{v}");
        let v = boundary_majorant(SharpKind::MuThm22, 0.565671, 16.0824).unwrap();
        assert!((v - 1.0).abs() < 1e-3, "{v}");
        let l1 = admissible_constant(SharpKind::Lambda1ThmF, 0.567284).unwrap();
        assert!((l1 - 18.6095).abs() < 1e-3, "{l1}");
    }

    #[test]
    fn kind_names_round_trip() {
        for k in SharpKind::ALL {
            assert_eq!(k.name().parse::<SharpKind>().unwrap(), k);
            assert_eq!(serde_json::to_value(k).unwrap(), k.name());
        }
    }
}
