//! Truncated Taylor series of analytic self-maps of the unit disk.
//!
//! A [`TruncatedSeries`] stores `a_0..a_M` exactly as computed and a
//! [`TailKind`] describing what is known about `a_n` for `n > M`. Every
//! infinite sum taken over a series is split into the finite part and a
//! certified bound on the tail, see the `*_tail` methods of [`TailKind`].
//!
//! Members of the Schur class are produced three ways: the Möbius maps
//! `f_a(z) = (a - z)/(1 - a z)`, finite Blaschke products, and the Schur
//! recursion driven by a [`SchurSample`].

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::csum_complex;

/// Truncation order used by verification runs unless configured otherwise.
pub const DEFAULT_ORDER: usize = 256;

/// Slack allowed on unimodularity tests for Schur parameters.
const UNIT_SLACK: f64 = 1e-12;

/// What is known about the coefficients beyond the truncation order `M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailKind {
    /// `|a_n| <= 1` for `n > M`; holds for every function in the Schur class.
    SchurCrude,
    /// `|a_n| <= scale * ratio^n` for `n > M`, with `0 <= ratio < 1`.
    Geometric { ratio: f64, scale: f64 },
    /// `a_n = 0` for `n > M`: the function is the polynomial itself.
    ExactZero,
    /// Nothing is certified; every tail bound is `+inf`.
    Uncertified,
}

impl TailKind {
    fn validate(&self) -> Result<()> {
        if let TailKind::Geometric { ratio, scale } = *self {
            if !(0.0..1.0).contains(&ratio) || !(scale >= 0.0) || !scale.is_finite() {
                return Err(Error::InvalidSeries(format!(
                    "geometric tail needs 0 <= ratio < 1 and finite scale >= 0, got ratio={ratio}, scale={scale}"
                )));
            }
        }
        Ok(())
    }

    /// Bound on `|a_n|` for a single index `n > M`.
    pub fn coeff_bound(&self, n: usize) -> f64 {
        match *self {
            TailKind::SchurCrude => 1.0,
            TailKind::Geometric { ratio, scale } => scale * ratio.powi(n as i32),
            TailKind::ExactZero => 0.0,
            TailKind::Uncertified => f64::INFINITY,
        }
    }

    /// Bound on `sum_{n>M} |a_n| r^n`.
    pub fn abs_tail(&self, order: usize, r: f64) -> f64 {
        let m = order as i32;
        match *self {
            TailKind::SchurCrude => r.powi(m + 1) / (1.0 - r),
            TailKind::Geometric { ratio, scale } => {
                let x = ratio * r;
                scale * x.powi(m + 1) / (1.0 - x)
            }
            TailKind::ExactZero => 0.0,
            TailKind::Uncertified => f64::INFINITY,
        }
    }

    /// Bound on `sum_{n>M} n |a_n| r^(n-1)`, the tail of the derivative majorant.
    pub fn derivative_tail(&self, order: usize, r: f64) -> f64 {
        let m = order as f64;
        let k = order as i32;
        match *self {
            TailKind::SchurCrude => r.powi(k) * ((m + 1.0) - m * r) / (1.0 - r).powi(2),
            TailKind::Geometric { ratio, scale } => {
                let x = ratio * r;
                scale * ratio * x.powi(k) * ((m + 1.0) - m * x) / (1.0 - x).powi(2)
            }
            TailKind::ExactZero => 0.0,
            TailKind::Uncertified => f64::INFINITY,
        }
    }

    /// Bound on `sum_{n>M} |a_n|^2 r^(2n)`.
    pub fn square_tail(&self, order: usize, r: f64) -> f64 {
        let k = order as i32;
        match *self {
            TailKind::SchurCrude => {
                let y = r * r;
                y.powi(k + 1) / (1.0 - y)
            }
            TailKind::Geometric { ratio, scale } => {
                let y = ratio * ratio * r * r;
                scale * scale * y.powi(k + 1) / (1.0 - y)
            }
            TailKind::ExactZero => 0.0,
            TailKind::Uncertified => f64::INFINITY,
        }
    }

    /// Bound on `sum_{n>M} n |a_n|^2 r^(2n)`.
    pub fn weighted_square_tail(&self, order: usize, r: f64) -> f64 {
        let m = order as f64;
        let k = order as i32;
        let weighted = |c2: f64, y: f64| c2 * y.powi(k + 1) * ((m + 1.0) - m * y) / (1.0 - y).powi(2);
        match *self {
            TailKind::SchurCrude => weighted(1.0, r * r),
            TailKind::Geometric { ratio, scale } => weighted(scale * scale, ratio * ratio * r * r),
            TailKind::ExactZero => 0.0,
            TailKind::Uncertified => f64::INFINITY,
        }
    }
}

/// Floating-point policy for the convolution-type series operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ArithMode {
    #[default]
    Float64,
    /// Compensated (Neumaier) accumulation of every convolution sum.
    Extended,
}

/// Taylor coefficients `a_0..a_M` plus a certified description of the tail.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SeriesRepr", into = "SeriesRepr")]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
    tail: TailKind,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    coeffs: Vec<[f64; 2]>,
    order: usize,
    tail: TailKind,
}

impl From<TruncatedSeries> for SeriesRepr {
    fn from(s: TruncatedSeries) -> Self {
        SeriesRepr {
            order: s.order(),
            coeffs: s.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            tail: s.tail,
        }
    }
}

impl TryFrom<SeriesRepr> for TruncatedSeries {
    type Error = Error;

    fn try_from(repr: SeriesRepr) -> Result<Self> {
        if repr.coeffs.len() != repr.order + 1 {
            return Err(Error::InvalidSeries(format!(
                "order {} does not match {} coefficients",
                repr.order,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr.coeffs.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
        TruncatedSeries::new(coeffs, repr.tail)
    }
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<Complex64>, tail: TailKind) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("at least one coefficient is required".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidSeries("non-finite coefficient".into()));
        }
        tail.validate()?;
        Ok(Self { coeffs, tail })
    }

    /// Polynomial with real coefficients; the tail is exactly zero.
    pub fn polynomial(coeffs: &[f64], order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 && coeffs[order + 1..].iter().any(|c| *c != 0.0) {
            return Err(Error::InvalidSeries(format!(
                "polynomial of degree {} does not fit order {order}",
                coeffs.len() - 1
            )));
        }
        let mut cs = vec![Complex64::new(0.0, 0.0); order + 1];
        for (dst, src) in cs.iter_mut().zip(coeffs) {
            *dst = Complex64::new(*src, 0.0);
        }
        Self::new(cs, TailKind::ExactZero)
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[0] = value;
        Self { coeffs, tail: TailKind::ExactZero }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn tail(&self) -> TailKind {
        self.tail
    }

    pub fn with_tail(mut self, tail: TailKind) -> Result<Self> {
        tail.validate()?;
        self.tail = tail;
        Ok(self)
    }

    /// `|a_0|`.
    pub fn a0_abs(&self) -> f64 {
        self.coeffs[0].norm()
    }

    /// Value of the truncated polynomial at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Value of the derivative of the truncated polynomial at `z`.
    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (n, c)| acc * z + c * n as f64)
    }

    /// `f` and `f'` at `z` in one pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        self.coeffs.iter().rev().fold((zero, zero), |(p, dp), c| (p * z + c, dp * z + p))
    }

    /// `f_0 = f - f(0)`.
    pub fn without_constant(&self) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = Complex64::new(0.0, 0.0);
        out
    }

    /// Largest `k` with `a_k != 0`, or `None` for the zero polynomial.
    fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != Complex64::new(0.0, 0.0))
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| self.coeffs[n] + other.coeffs[n]).collect();
        let tail = match (self.tail, other.tail) {
            (TailKind::ExactZero, TailKind::ExactZero) if self.order() == other.order() => TailKind::ExactZero,
            (a, b) => combine_geometric(a, b).unwrap_or(TailKind::Uncertified),
        };
        Self { coeffs, tail }
    }

    /// Cauchy product truncated to the common order.
    pub fn multiply(&self, other: &Self, mode: ArithMode) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| convolve(&self.coeffs, &other.coeffs, n, 0, mode))
            .collect();
        // Products of two exact polynomials stay exact as long as nothing spills past the order.
        let exact = self.tail == TailKind::ExactZero
            && other.tail == TailKind::ExactZero
            && match (self.degree(), other.degree()) {
                (Some(d1), Some(d2)) => d1 + d2 <= order,
                _ => true,
            };
        let tail = if exact { TailKind::ExactZero } else { TailKind::Uncertified };
        Self { coeffs, tail }
    }

    /// Termwise derivative; the order drops by one (a constant stays a constant).
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            let tail = if self.tail == TailKind::ExactZero { TailKind::ExactZero } else { TailKind::Uncertified };
            return Self { coeffs: vec![Complex64::new(0.0, 0.0)], tail };
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(n, c)| c * n as f64).collect();
        let tail = if self.tail == TailKind::ExactZero { TailKind::ExactZero } else { TailKind::Uncertified };
        Self { coeffs, tail }
    }

    /// Series `b` with `self * b = 1` to the same order.
    pub fn reciprocal(&self, mode: ArithMode) -> Result<Self> {
        let one = Self::constant(Complex64::new(1.0, 0.0), self.order());
        let mut q = divide(&one.coeffs, &self.coeffs, mode)?;
        q.truncate(self.order() + 1);
        Ok(Self { coeffs: q, tail: TailKind::Uncertified })
    }
}

fn combine_geometric(a: TailKind, b: TailKind) -> Option<TailKind> {
    let as_geo = |t: TailKind| match t {
        TailKind::Geometric { ratio, scale } => Some((ratio, scale)),
        TailKind::ExactZero => Some((0.0, 0.0)),
        _ => None,
    };
    let (ra, sa) = as_geo(a)?;
    let (rb, sb) = as_geo(b)?;
    Some(TailKind::Geometric { ratio: ra.max(rb), scale: sa + sb })
}

/// `sum_{k=lo}^{n} a_k b_{n-k}` with missing coefficients treated as zero.
fn convolve(a: &[Complex64], b: &[Complex64], n: usize, lo: usize, mode: ArithMode) -> Complex64 {
    let terms = (lo..=n).filter(|&k| k < a.len() && n - k < b.len()).map(|k| a[k] * b[n - k]);
    match mode {
        ArithMode::Float64 => terms.sum(),
        ArithMode::Extended => csum_complex(terms),
    }
}

/// Power-series quotient `num / den` to the length of `num`.
fn divide(num: &[Complex64], den: &[Complex64], mode: ArithMode) -> Result<Vec<Complex64>> {
    let d0 = den[0];
    if d0 == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroConstantTerm);
    }
    let mut q: Vec<Complex64> = Vec::with_capacity(num.len());
    for n in 0..num.len() {
        let acc = convolve(den, &q, n, 1, mode);
        q.push((num[n] - acc) / d0);
    }
    Ok(q)
}

fn check_order_param(name: &'static str, a: f64) -> Result<()> {
    if !(0.0..1.0).contains(&a) {
        return Err(Error::ParameterOutOfRange { name, value: a, range: "[0, 1)" });
    }
    Ok(())
}

/// Taylor series of `f_a(z) = (a - z)/(1 - a z)`, `0 <= a < 1`.
///
/// `a_0 = a`, `a_n = -(1 - a^2) a^(n-1)`; the tail is geometric with ratio `a`
/// and scale `(1 - a^2)/a`. At `a = 0` the map is `-z` and the tail is exactly
/// zero once `a_1` is stored.
pub fn moebius_series(a: f64, order: usize) -> Result<TruncatedSeries> {
    check_order_param("a", a)?;
    let k = 1.0 - a * a;
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(a, 0.0));
    let mut pow = 1.0;
    for _ in 1..=order {
        coeffs.push(Complex64::new(-k * pow, 0.0));
        pow *= a;
    }
    let tail = if a > 0.0 {
        TailKind::Geometric { ratio: a, scale: k / a }
    } else if order >= 1 {
        TailKind::ExactZero
    } else {
        TailKind::SchurCrude
    };
    TruncatedSeries::new(coeffs, tail)
}

/// Schur parameters `gamma_0..gamma_m` (each of modulus at most 1) and the
/// seed they were drawn with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchurSample {
    pub params: Vec<[f64; 2]>,
    pub seed: u64,
}

impl SchurSample {
    pub fn new(params: Vec<Complex64>, seed: u64) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::InvalidSeries("Schur sample needs at least one parameter".into()));
        }
        if let Some(g) = params.iter().find(|g| g.norm() > 1.0 + UNIT_SLACK || !g.norm().is_finite()) {
            return Err(Error::ParameterOutOfRange {
                name: "|gamma_k|",
                value: g.norm(),
                range: "[0, 1]",
            });
        }
        Ok(Self { params: params.iter().map(|g| [g.re, g.im]).collect(), seed })
    }

    pub fn params(&self) -> Vec<Complex64> {
        self.params.iter().map(|[re, im]| Complex64::new(*re, *im)).collect()
    }

    /// Random sample: degree `m` uniform in `[1, max_degree]`, then `m + 1`
    /// parameters uniform (by area) on the disk of radius `radius`.
    pub fn random(seed: u64, max_degree: usize, radius: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let degree = rng.random_range(1..=max_degree.max(1));
        let params = (0..=degree)
            .map(|_| {
                let rho = radius * rng.random::<f64>().sqrt();
                let theta = std::f64::consts::TAU * rng.random::<f64>();
                Complex64::from_polar(rho, theta)
            })
            .collect::<Vec<_>>();
        Self { params: params.iter().map(|g| [g.re, g.im]).collect(), seed }
    }
}

/// Taylor expansion of the Schur function with parameters `s.params`.
///
/// Built from the innermost parameter outward with
/// `f = (gamma + z g)/(1 + conj(gamma) z g)`; a unimodular parameter makes
/// everything inside it irrelevant and yields the constant `gamma`.
pub fn schur_to_series(s: &SchurSample, order: usize) -> Result<TruncatedSeries> {
    let params = s.params();
    if params.is_empty() {
        return Err(Error::InvalidSeries("Schur sample needs at least one parameter".into()));
    }
    let zero = Complex64::new(0.0, 0.0);
    let mut f = vec![zero; order + 1];
    f[0] = *params.last().unwrap();
    for &gamma in params.iter().rev().skip(1) {
        if gamma.norm() >= 1.0 - UNIT_SLACK {
            f = vec![zero; order + 1];
            f[0] = gamma;
            continue;
        }
        // zg = z * g, truncated
        let mut num = vec![zero; order + 1];
        let mut den = vec![zero; order + 1];
        num[0] = gamma;
        den[0] = Complex64::new(1.0, 0.0);
        for n in 1..=order {
            num[n] = f[n - 1];
            den[n] = gamma.conj() * f[n - 1];
        }
        f = divide(&num, &den, ArithMode::Float64)?;
    }
    TruncatedSeries::new(f, TailKind::SchurCrude)
}

/// Taylor expansion of `phase * prod_k (z_k - z)/(1 - conj(z_k) z)`.
pub fn blaschke_series(zeros: &[Complex64], phase: Complex64, order: usize) -> Result<TruncatedSeries> {
    if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0)) {
        return Err(Error::ZeroOutsideDisk(z.norm()));
    }
    let mut acc = TruncatedSeries::constant(phase, order);
    for &zk in zeros {
        let k = 1.0 - zk.norm_sqr();
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(zk);
        let mut pow = Complex64::new(1.0, 0.0);
        for _ in 1..=order {
            coeffs.push(-pow * k);
            pow *= zk.conj();
        }
        let factor = TruncatedSeries { coeffs, tail: TailKind::Uncertified };
        acc = acc.multiply(&factor, ArithMode::Float64);
    }
    acc.tail = TailKind::SchurCrude;
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
    }

    #[test]
    fn moebius_at_zero_is_minus_z() {
        let s = moebius_series(0.0, 2).unwrap();
        assert_eq!(s.coeffs(), &[c(0.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(s.tail(), TailKind::ExactZero);
    }

    #[test]
    fn moebius_half() {
        let s = moebius_series(0.5, 3).unwrap();
        let want = [c(0.5, 0.0), c(-0.75, 0.0), c(-0.375, 0.0), c(-0.1875, 0.0)];
        assert!(close(s.coeffs(), &want, 1e-15));
        assert_eq!(s.tail(), TailKind::Geometric { ratio: 0.5, scale: 1.5 });
    }

    #[test]
    fn moebius_rejects_out_of_range() {
        assert!(moebius_series(1.0, 4).is_err());
        assert!(moebius_series(-0.1, 4).is_err());
    }

    #[test]
    fn moebius_zero_order_zero_keeps_a_valid_tail() {
        let s = moebius_series(0.0, 0).unwrap();
        assert_eq!(s.tail(), TailKind::SchurCrude);
    }

    #[test]
    fn schur_single_parameter_is_constant() {
        let s = SchurSample::new(vec![c(0.3, -0.2)], 0).unwrap();
        let f = schur_to_series(&s, 5).unwrap();
        assert_eq!(f.coeffs()[0], c(0.3, -0.2));
        assert!(f.coeffs()[1..].iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn schur_zero_then_one_is_identity() {
        let s = SchurSample::new(vec![c(0.0, 0.0), c(1.0, 0.0)], 0).unwrap();
        let f = schur_to_series(&s, 4).unwrap();
        let want = [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(close(f.coeffs(), &want, 0.0));
    }

    #[test]
    fn schur_of_moebius_parameters() {
        // (0.5 - z)/(1 - 0.5 z) has Schur parameters [0.5, -1]
        let s = SchurSample::new(vec![c(0.5, 0.0), c(-1.0, 0.0)], 0).unwrap();
        let f = schur_to_series(&s, 12).unwrap();
        let g = moebius_series(0.5, 12).unwrap();
        assert!(close(f.coeffs(), g.coeffs(), 1e-15));
    }

    #[test]
    fn schur_rejects_parameters_outside_disk() {
        assert!(SchurSample::new(vec![c(1.1, 0.0)], 0).is_err());
        assert!(SchurSample::new(vec![], 0).is_err());
    }

    #[test]
    fn blaschke_single_real_zero_matches_moebius() {
        let b = blaschke_series(&[c(0.7, 0.0)], c(1.0, 0.0), 20).unwrap();
        let m = moebius_series(0.7, 20).unwrap();
        assert!(close(b.coeffs(), m.coeffs(), 1e-15));
    }

    #[test]
    fn blaschke_empty_product_is_phase() {
        let phase = Complex64::from_polar(1.0, 0.9);
        let b = blaschke_series(&[], phase, 6).unwrap();
        assert_eq!(b.coeffs()[0], phase);
        assert!(b.coeffs()[1..].iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn blaschke_rejects_zero_on_circle() {
        assert_eq!(
            blaschke_series(&[c(0.0, 1.0)], c(1.0, 0.0), 3),
            Err(Error::ZeroOutsideDisk(1.0))
        );
    }

    #[test]
    fn differentiate_three_terms() {
        let s = TruncatedSeries::new(vec![c(1.0, 0.0), c(2.0, 1.0), c(3.0, 0.0)], TailKind::ExactZero).unwrap();
        assert_eq!(s.differentiate().coeffs(), &[c(2.0, 1.0), c(6.0, 0.0)]);
    }

    #[test]
    fn reciprocal_of_zero_constant_term_fails() {
        let s = TruncatedSeries::polynomial(&[0.0, 1.0], 3).unwrap();
        assert_eq!(s.reciprocal(ArithMode::Float64), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn geometric_times_linear_is_moebius() {
        // (a - z) * 1/(1 - a z)
        let a = 0.35;
        let m = 30;
        let lin = TruncatedSeries::polynomial(&[a, -1.0], m).unwrap();
        let den = TruncatedSeries::polynomial(&[1.0, -a], m).unwrap();
        let geo = den.reciprocal(ArithMode::Extended).unwrap();
        let prod = lin.multiply(&geo, ArithMode::Float64);
        assert!(close(prod.coeffs(), moebius_series(a, m).unwrap().coeffs(), 1e-15));
    }

    #[test]
    fn exact_polynomials_multiply_exactly_when_they_fit() {
        let p = TruncatedSeries::polynomial(&[1.0, 1.0], 4).unwrap();
        assert_eq!(p.multiply(&p, ArithMode::Float64).tail(), TailKind::ExactZero);
        let q = TruncatedSeries::polynomial(&[1.0, 1.0, 1.0], 3).unwrap();
        assert_eq!(q.multiply(&q, ArithMode::Float64).tail(), TailKind::Uncertified);
    }

    #[test]
    fn geometric_tails_add() {
        let f = moebius_series(0.5, 4).unwrap();
        let g = moebius_series(0.25, 4).unwrap();
        assert_eq!(f.add(&g).tail(), TailKind::Geometric { ratio: 0.5, scale: 1.5 + 3.75 });
    }

    #[test]
    fn crude_tail_closed_forms() {
        let t = TailKind::SchurCrude;
        let (m, r) = (3usize, 0.5f64);
        let brute = |f: &dyn Fn(usize) -> f64| (m + 1..4000).map(f).sum::<f64>();
        assert!((t.abs_tail(m, r) - brute(&|n| r.powi(n as i32))).abs() < 1e-15);
        assert!((t.derivative_tail(m, r) - brute(&|n| n as f64 * r.powi(n as i32 - 1))).abs() < 1e-14);
        assert!((t.square_tail(m, r) - brute(&|n| r.powi(2 * n as i32))).abs() < 1e-15);
        assert!((t.weighted_square_tail(m, r) - brute(&|n| n as f64 * r.powi(2 * n as i32))).abs() < 1e-15);
    }

    #[test]
    fn geometric_tail_closed_forms() {
        let (rho, sc) = (0.6, 2.0);
        let t = TailKind::Geometric { ratio: rho, scale: sc };
        let (m, r) = (5usize, 0.7f64);
        let b = |n: usize| sc * rho.powi(n as i32);
        let brute = |f: &dyn Fn(usize) -> f64| (m + 1..4000).map(f).sum::<f64>();
        assert!((t.abs_tail(m, r) - brute(&|n| b(n) * r.powi(n as i32))).abs() < 1e-14);
        assert!((t.derivative_tail(m, r) - brute(&|n| n as f64 * b(n) * r.powi(n as i32 - 1))).abs() < 1e-13);
        assert!((t.square_tail(m, r) - brute(&|n| b(n).powi(2) * r.powi(2 * n as i32))).abs() < 1e-14);
        assert!(
            (t.weighted_square_tail(m, r) - brute(&|n| n as f64 * b(n).powi(2) * r.powi(2 * n as i32))).abs() < 1e-14
        );
    }

    #[test]
    fn json_shape() {
        let s = moebius_series(0.5, 2).unwrap();
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["order"], 2);
        assert_eq!(v["coeffs"][1][0], -0.75);
        assert_eq!(v["tail"]["kind"], "geometric");
        let back: TruncatedSeries = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_rejects_mismatched_order() {
        let bad = r#"{"coeffs": [[1.0, 0.0]], "order": 3, "tail": {"kind": "exact_zero"}}"#;
        assert!(serde_json::from_str::<TruncatedSeries>(bad).is_err());
    }
}
