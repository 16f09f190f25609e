//! Bohr-type functionals of a truncated series.
//!
//! Every infinite sum is returned as a [`ValueInterval`]: `lo` is the value
//! computed from the stored coefficients, `hi` adds the certified tail bound.
//! For sums of nonnegative terms `[lo, hi]` encloses the true value; for
//! `|f(z)|` and `|f'(z)|` only `hi` is a guaranteed bound. Verdicts always
//! use `hi`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::csum;
use crate::series::TruncatedSeries;
use crate::tolerances::AREA_COEFF;

/// `[lo, hi]` with `hi - lo` the certified tail contribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValueInterval {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Serialize)]
struct IntervalJson {
    lo: f64,
    hi: f64,
    tail: f64,
}

impl Serialize for ValueInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalJson { lo: self.lo, hi: self.hi, tail: self.tail() }.serialize(s)
    }
}

impl ValueInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi || hi.is_nan(), "lo = {lo} > hi = {hi}");
        Self { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Self { lo: x, hi: x }
    }

    pub fn with_tail(value: f64, tail: f64) -> Self {
        Self::new(value, value + tail)
    }

    pub fn tail(&self) -> f64 {
        self.hi - self.lo
    }

    /// Scale by `k >= 0`.
    pub fn scale(self, k: f64) -> Self {
        Self::new(k * self.lo, k * self.hi)
    }

    /// Square of a nonnegative interval.
    pub fn square(self) -> Self {
        Self::new(self.lo * self.lo, self.hi * self.hi)
    }
}

impl std::ops::Add for ValueInterval {
    type Output = ValueInterval;
    fn add(self, o: ValueInterval) -> ValueInterval {
        ValueInterval::new(self.lo + o.lo, self.hi + o.hi)
    }
}

/// Name of an evaluator, as used on the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FunctionalId {
    #[serde(rename = "B_N")]
    BN,
    #[serde(rename = "norm_f0_sq")]
    NormF0Sq,
    #[serde(rename = "A_f0")]
    AF0,
    #[serde(rename = "area_ratio")]
    AreaRatio,
    #[serde(rename = "area_odds")]
    AreaOdds,
    #[serde(rename = "rogosinski_partial")]
    RogosinskiPartial,
    #[serde(rename = "bohr_rogosinski_RN")]
    BohrRogosinskiRN,
    #[serde(rename = "thmC_lhs")]
    ThmCLhs,
    #[serde(rename = "thmD_lhs")]
    ThmDLhs,
    #[serde(rename = "thm21_lhs")]
    Thm21Lhs,
    #[serde(rename = "thm22_lhs")]
    Thm22Lhs,
    #[serde(rename = "lemmaA")]
    LemmaA,
}

impl FunctionalId {
    pub const ALL: [FunctionalId; 12] = [
        FunctionalId::BN,
        FunctionalId::NormF0Sq,
        FunctionalId::AF0,
        FunctionalId::AreaRatio,
        FunctionalId::AreaOdds,
        FunctionalId::RogosinskiPartial,
        FunctionalId::BohrRogosinskiRN,
        FunctionalId::ThmCLhs,
        FunctionalId::ThmDLhs,
        FunctionalId::Thm21Lhs,
        FunctionalId::Thm22Lhs,
        FunctionalId::LemmaA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionalId::BN => "B_N",
            FunctionalId::NormF0Sq => "norm_f0_sq",
            FunctionalId::AF0 => "A_f0",
            FunctionalId::AreaRatio => "area_ratio",
            FunctionalId::AreaOdds => "area_odds",
            FunctionalId::RogosinskiPartial => "rogosinski_partial",
            FunctionalId::BohrRogosinskiRN => "bohr_rogosinski_RN",
            FunctionalId::ThmCLhs => "thmC_lhs",
            FunctionalId::ThmDLhs => "thmD_lhs",
            FunctionalId::Thm21Lhs => "thm21_lhs",
            FunctionalId::Thm22Lhs => "thm22_lhs",
            FunctionalId::LemmaA => "lemmaA",
        }
    }

    /// Whether the functional depends on the point `z`, not only on `|z|`.
    pub fn is_pointwise(self) -> bool {
        matches!(
            self,
            FunctionalId::BohrRogosinskiRN
                | FunctionalId::ThmCLhs
                | FunctionalId::ThmDLhs
                | FunctionalId::Thm21Lhs
                | FunctionalId::Thm22Lhs
        )
    }
}

impl fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionalId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionalId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "functional", value: s.to_string() })
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::RadiusOutOfRange(r));
    }
    Ok(())
}

/// Stored coefficient `|a_n|`, or the tail bound past the order.
fn coeff_abs(f: &TruncatedSeries, n: usize) -> f64 {
    f.coeffs().get(n).map(|c| c.norm()).unwrap_or_else(|| f.tail().coeff_bound(n))
}

/// `B_N(f, r) = sum_{n >= N} |a_n| r^n`.
pub fn bohr_tail(f: &TruncatedSeries, n: usize, r: f64) -> Result<ValueInterval> {
    check_radius(r)?;
    let finite = csum(f.coeffs().iter().enumerate().skip(n).map(|(k, c)| c.norm() * r.powi(k as i32)));
    Ok(ValueInterval::with_tail(finite, f.tail().abs_tail(f.order(), r)))
}

/// `sum_{n >= from} |a_n|^2 r^(2n)`.
fn square_sum_from(f: &TruncatedSeries, from: usize, r: f64) -> ValueInterval {
    let r2 = r * r;
    let finite = csum(f.coeffs().iter().enumerate().skip(from).map(|(k, c)| c.norm_sqr() * r2.powi(k as i32)));
    ValueInterval::with_tail(finite, f.tail().square_tail(f.order(), r))
}

/// `||f_0||_r^2 = sum_{n >= 1} |a_n|^2 r^(2n)`.
pub fn norm_f0_sq(f: &TruncatedSeries, r: f64) -> Result<ValueInterval> {
    check_radius(r)?;
    Ok(square_sum_from(f, 1, r))
}

/// `1/(1 + |a_0|) + r/(1 - r)`.
fn refinement_weight(a0: f64, r: f64) -> f64 {
    1.0 / (1.0 + a0) + r / (1.0 - r)
}

/// `A(f_0, r) = (1/(1+|a_0|) + r/(1-r)) ||f_0||_r^2`.
pub fn a_refinement(f: &TruncatedSeries, r: f64) -> Result<ValueInterval> {
    Ok(norm_f0_sq(f, r)?.scale(refinement_weight(f.a0_abs(), r)))
}

/// `S_r/pi = sum_{n >= 1} n |a_n|^2 r^(2n)`.
pub fn area_ratio(f: &TruncatedSeries, r: f64) -> Result<ValueInterval> {
    check_radius(r)?;
    let r2 = r * r;
    let finite = csum(
        f.coeffs().iter().enumerate().skip(1).map(|(k, c)| k as f64 * c.norm_sqr() * r2.powi(k as i32)),
    );
    Ok(ValueInterval::with_tail(finite, f.tail().weighted_square_tail(f.order(), r)))
}

/// `S_r/(pi - S_r)` from an enclosure of `S_r/pi`.
pub fn odds_from_ratio(ratio: ValueInterval) -> Result<ValueInterval> {
    if !(ratio.hi < 1.0) {
        return Err(Error::AreaOddsDomain(ratio.hi));
    }
    Ok(ValueInterval::new(ratio.lo / (1.0 - ratio.lo), ratio.hi / (1.0 - ratio.hi)))
}

/// `S_r/(pi - S_r)`.
pub fn area_odds(f: &TruncatedSeries, r: f64) -> Result<ValueInterval> {
    odds_from_ratio(area_ratio(f, r)?)
}

/// Schwarz–Pick bound `(r + a_0)/(1 + r a_0)` on `|f(z)|` for `|z| = r`.
pub fn schwarz_pick_modulus(a0: f64, r: f64) -> f64 {
    (r + a0) / (1.0 + r * a0)
}

/// Schwarz–Pick bound `(1 - |f|^2)/(1 - r^2)` on `|f'(z)|`.
pub fn schwarz_pick_derivative(fmod: f64, r: f64) -> f64 {
    (1.0 - fmod * fmod) / (1.0 - r * r)
}

/// Upper enclosures of `|f(z)|` and `|f'(z)|` at one point.
pub fn pointwise(f: &TruncatedSeries, z: Complex64) -> Result<(ValueInterval, ValueInterval)> {
    let r = z.norm();
    check_radius(r)?;
    let (p, dp) = f.eval_with_derivative(z);
    let tail = f.tail();
    Ok((
        ValueInterval::with_tail(p.norm(), tail.abs_tail(f.order(), r)),
        ValueInterval::with_tail(dp.norm(), tail.derivative_tail(f.order(), r)),
    ))
}

/// The `z`-independent ingredients of the theorem functionals at radius `r`.
#[derive(Debug, Clone)]
pub struct RadialSums {
    pub r: f64,
    pub a0: f64,
    /// `B_N` for `N = 0..bohr.len()`.
    pub bohr: Vec<ValueInterval>,
    pub norm_f0_sq: ValueInterval,
    pub a_refinement: ValueInterval,
    pub area_ratio: ValueInterval,
}

impl RadialSums {
    /// Precomputes `B_0..B_{max_n}` and the quadratic sums.
    pub fn new(f: &TruncatedSeries, r: f64, max_n: usize) -> Result<Self> {
        check_radius(r)?;
        let bohr = (0..=max_n.max(2)).map(|n| bohr_tail(f, n, r)).collect::<Result<Vec<_>>>()?;
        let norm = norm_f0_sq(f, r)?;
        Ok(Self {
            r,
            a0: f.a0_abs(),
            bohr,
            norm_f0_sq: norm,
            a_refinement: norm.scale(refinement_weight(f.a0_abs(), r)),
            area_ratio: area_ratio(f, r)?,
        })
    }

    pub fn area_odds(&self) -> Result<ValueInterval> {
        odds_from_ratio(self.area_ratio)
    }

    /// `|f(z)| + |f'(z)| r + B_2(f, r)`.
    pub fn thm_c(&self, modulus: ValueInterval, derivative: ValueInterval) -> ValueInterval {
        modulus + derivative.scale(self.r) + self.bohr[2]
    }

    /// [`Self::thm_c`] plus `A(f_0, r)`.
    pub fn thm_d(&self, modulus: ValueInterval, derivative: ValueInterval) -> ValueInterval {
        self.thm_c(modulus, derivative) + self.a_refinement
    }

    /// [`Self::thm_d`] plus `c S_r/pi + lambda (S_r/pi)^2`.
    pub fn thm21(&self, modulus: ValueInterval, derivative: ValueInterval, lambda: f64) -> ValueInterval {
        let s = self.area_ratio;
        self.thm_d(modulus, derivative) + s.scale(AREA_COEFF) + s.square().scale(lambda)
    }

    /// [`Self::thm_d`] plus `c S_r/(pi-S_r) + mu (S_r/(pi-S_r))^2`.
    pub fn thm22(&self, modulus: ValueInterval, derivative: ValueInterval, mu: f64) -> Result<ValueInterval> {
        let w = self.area_odds()?;
        Ok(self.thm_d(modulus, derivative) + w.scale(AREA_COEFF) + w.square().scale(mu))
    }
}

/// `|f(z)| + |f'(z)| r + B_2(f, r)` with `r = |z|`.
pub fn thm_c_lhs(f: &TruncatedSeries, z: Complex64) -> Result<ValueInterval> {
    let (m, d) = pointwise(f, z)?;
    Ok(RadialSums::new(f, z.norm(), 2)?.thm_c(m, d))
}

/// `|f(z)| + |f'(z)| r + B_2(f, r) + A(f_0, r)`.
pub fn thm_d_lhs(f: &TruncatedSeries, z: Complex64) -> Result<ValueInterval> {
    let (m, d) = pointwise(f, z)?;
    Ok(RadialSums::new(f, z.norm(), 2)?.thm_d(m, d))
}

/// [`thm_d_lhs`] `+ c (S_r/pi) + lambda (S_r/pi)^2`, `c = (221 - 43 sqrt 17)/64`.
pub fn thm21_lhs(f: &TruncatedSeries, z: Complex64, lambda: f64) -> Result<ValueInterval> {
    let (m, d) = pointwise(f, z)?;
    Ok(RadialSums::new(f, z.norm(), 2)?.thm21(m, d, lambda))
}

/// [`thm_d_lhs`] `+ c S_r/(pi - S_r) + mu (S_r/(pi - S_r))^2`.
pub fn thm22_lhs(f: &TruncatedSeries, z: Complex64, mu: f64) -> Result<ValueInterval> {
    let (m, d) = pointwise(f, z)?;
    RadialSums::new(f, z.norm(), 2)?.thm22(m, d, mu)
}

/// Both sides of the refined coefficient inequality
///
/// `B_N + sgn(t) sum_{n=1}^t |a_n|^2 r^N/(1-r) + (1/(1+|a_0|) + r/(1-r)) sum_{n>t} |a_n|^2 r^(2n)
///  <= (1 - |a_0|^2) r^N / (1 - r)`, with `t = floor((N-1)/2)`.
pub fn lemma_a_sides(f: &TruncatedSeries, n: usize, r: f64) -> Result<(ValueInterval, ValueInterval)> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange { name: "N", value: 0.0, range: ">= 1" });
    }
    check_radius(r)?;
    let t = (n - 1) / 2;
    let rn = r.powi(n as i32);
    let a0 = f.a0_abs();
    let head = if t > 0 {
        let s = csum((1..=t).map(|k| coeff_abs(f, k).powi(2)));
        ValueInterval::point(s * rn / (1.0 - r))
    } else {
        ValueInterval::point(0.0)
    };
    let rest = square_sum_from(f, t + 1, r).scale(refinement_weight(a0, r));
    let lhs = bohr_tail(f, n, r)? + head + rest;
    let rhs = ValueInterval::point((1.0 - a0 * a0) * rn / (1.0 - r));
    Ok((lhs, rhs))
}

/// `n_angles` equally spaced points on `|z| = r`, starting on the positive real axis.
pub fn circle_points(r: f64, n_angles: usize) -> impl Iterator<Item = Complex64> {
    (0..n_angles).map(move |k| Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / n_angles as f64))
}

/// `max_theta |sum_{n<N} a_n (r e^{i theta})^n|` over `n_angles` equispaced angles.
pub fn rogosinski_partial_sup(f: &TruncatedSeries, n: usize, r: f64, n_angles: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange { name: "N", value: 0.0, range: ">= 1" });
    }
    if n_angles < 8 {
        return Err(Error::ParameterOutOfRange { name: "n_angles", value: n_angles as f64, range: ">= 8" });
    }
    check_radius(r)?;
    if n > f.order() + 1 {
        return Err(Error::OrderTooLow { needed: n, order: f.order() });
    }
    let head = &f.coeffs()[..n];
    let sup = circle_points(r, n_angles)
        .map(|z| head.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c).norm())
        .fold(0.0, f64::max);
    Ok(sup)
}

/// Bohr–Rogosinski sum `|f(z)| + B_N(f, r)`.
pub fn bohr_rogosinski_rn(f: &TruncatedSeries, z: Complex64, n: usize) -> Result<ValueInterval> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange { name: "N", value: 0.0, range: ">= 1" });
    }
    let (m, _) = pointwise(f, z)?;
    Ok(m + bohr_tail(f, n, z.norm())?)
}

/// Extra inputs some functionals need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalParams {
    pub n: usize,
    pub lambda: f64,
    pub mu: f64,
    pub angles: usize,
}

impl Default for EvalParams {
    fn default() -> Self {
        Self { n: 1, lambda: 0.0, mu: 0.0, angles: 64 }
    }
}

/// Evaluates `id` at `z` (radial functionals use `|z|`). For `lemmaA` the
/// left side is returned; `rogosinski_partial` yields a point interval.
pub fn evaluate(id: FunctionalId, f: &TruncatedSeries, z: Complex64, p: &EvalParams) -> Result<ValueInterval> {
    let r = z.norm();
    match id {
        FunctionalId::BN => bohr_tail(f, p.n, r),
        FunctionalId::NormF0Sq => norm_f0_sq(f, r),
        FunctionalId::AF0 => a_refinement(f, r),
        FunctionalId::AreaRatio => area_ratio(f, r),
        FunctionalId::AreaOdds => area_odds(f, r),
        FunctionalId::RogosinskiPartial => rogosinski_partial_sup(f, p.n, r, p.angles).map(ValueInterval::point),
        FunctionalId::BohrRogosinskiRN => bohr_rogosinski_rn(f, z, p.n),
        FunctionalId::ThmCLhs => thm_c_lhs(f, z),
        FunctionalId::ThmDLhs => thm_d_lhs(f, z),
        FunctionalId::Thm21Lhs => thm21_lhs(f, z, p.lambda),
        FunctionalId::Thm22Lhs => thm22_lhs(f, z, p.mu),
        FunctionalId::LemmaA => lemma_a_sides(f, p.n, r).map(|(lhs, _)| lhs),
    }
}
