//! Randomized verification sweeps over the Schur class.
//!
//! Each check compares the certified upper bound of a functional with the
//! threshold the corresponding inequality promises, only inside the radius
//! range where it is stated. Samples fan out over a rayon pool; per-sample
//! tallies are merged in sample order so reports are reproducible.

mod report;
pub mod sweep;

pub use report::{emit_radii, emit_report, ReportFormat};

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{audit, table_hash};
use crate::extremal::{
    minimize_admissible, probe_at, sharp_constant, validity_margin, SharpConstant, SharpKind, DEFAULT_GRID,
    DEFAULT_REFINE_TOL,
};
use crate::functionals::{
    circle_points, lemma_a_sides, pointwise, rogosinski_partial_sup, FunctionalId, RadialSums, ValueInterval,
};
use crate::radius::{solve_radius, RadiusEquation};
use crate::series::{moebius_series, schur_to_series, SchurSample, TruncatedSeries};
use crate::tolerances::{
    AREA_BOUND_RADIUS, BOHR_RADIUS, COMPOSITE, CRITICAL_RADIUS, IDENTITY, PROBE_EPS, RADIUS_TOL, ROGOSINSKI,
    ROGOSINSKI_RADIUS,
};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "BOHR_WORKERS";

pub const SHARPNESS_THM21: &str = "sharpness_thm21";
pub const SHARPNESS_THM22: &str = "sharpness_thm22";
pub const BOHR_SHARPNESS: &str = "bohr_sharpness";

/// Largest `N` for the Rogosinski partial sums.
pub const ROGOSINSKI_MAX_N: usize = 8;
/// Largest `N` for the refined coefficient inequality and the Bohr–Rogosinski sums.
pub const LEMMA_MAX_N: usize = 6;

const VALIDITY_GRID: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_degree: usize,
    pub truncation_order: usize,
    pub radii: Vec<f64>,
    pub checks: Vec<FunctionalId>,
    pub angles: usize,
    /// Not part of the config hash; results do not depend on it.
    #[serde(skip)]
    pub workers: usize,
    /// Radius of the disk the random Schur parameters are drawn from.
    pub sample_radius: f64,
    /// Use these Schur parameters for every sample instead of drawing them.
    pub fixed_params: Option<Vec<[f64; 2]>>,
    /// Skip radii outside the range where each inequality is stated.
    pub enforce_domains: bool,
    /// Overrides for the sharp constants used by the checks.
    pub lambda: Option<f64>,
    pub mu: Option<f64>,
}

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            max_degree: 8,
            truncation_order: 256,
            radii: vec![0.1, 0.25, CRITICAL_RADIUS, BOHR_RADIUS, 0.4, ROGOSINSKI_RADIUS, AREA_BOUND_RADIUS],
            checks: FunctionalId::ALL.to_vec(),
            angles: 64,
            workers: default_workers(),
            sample_radius: 0.95,
            fixed_params: None,
            enforce_domains: true,
            lambda: None,
            mu: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        if self.samples == 0 {
            return bad("samples must be at least 1");
        }
        if self.checks.is_empty() {
            return bad("at least one check is required");
        }
        if self.radii.is_empty() || self.radii.iter().any(|r| !(0.0..1.0).contains(r)) {
            return bad("radii must be nonempty and lie in [0, 1)");
        }
        if self.angles < 8 {
            return bad("angles must be at least 8");
        }
        if self.max_degree == 0 {
            return bad("max_degree must be at least 1");
        }
        if self.truncation_order < ROGOSINSKI_MAX_N {
            return bad("truncation_order is too small for the partial-sum checks");
        }
        if !(self.sample_radius > 0.0 && self.sample_radius <= 1.0) {
            return bad("sample_radius must lie in (0, 1]");
        }
        if self.workers == 0 {
            return bad("workers must be at least 1");
        }
        for c in [self.lambda, self.mu].into_iter().flatten() {
            if !(c.is_finite() && c >= 0.0) {
                return bad("constant overrides must be finite and nonnegative");
            }
        }
        if let Some(p) = &self.fixed_params {
            let params = p.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
            SchurSample::new(params, self.seed)?;
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON form.
    pub fn hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serializes");
        hex::encode(Sha256::digest(&json))
    }

    /// Seed of sample `i`, decorrelated from neighbouring indices.
    pub fn sample_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64).rotate_left(17) ^ self.seed
    }

    fn sample(&self, i: usize) -> Result<SchurSample> {
        let seed = self.sample_seed(i);
        match &self.fixed_params {
            Some(p) => SchurSample::new(p.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(), seed),
            None => Ok(SchurSample::random(seed, self.max_degree, self.sample_radius)),
        }
    }
}

/// The offending evaluation of a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WorstCase {
    /// `value.hi - threshold` for upper bounds, `threshold - value.lo` for
    /// sharpness probes; nonpositive means satisfied.
    pub margin: f64,
    pub value: ValueInterval,
    pub threshold: f64,
    pub seed: u64,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RadiusStats {
    pub pass_count: u64,
    pub fail_count: u64,
    pub worst: Option<WorstCase>,
}

impl RadiusStats {
    fn merge(&mut self, other: RadiusStats) {
        self.pass_count += other.pass_count;
        self.fail_count += other.fail_count;
        if let Some(w) = other.worst {
            if self.worst.as_ref().is_none_or(|cur| w.margin > cur.margin) {
                self.worst = Some(w);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckStats {
    pub pass_count: u64,
    pub fail_count: u64,
    pub worst_margin: f64,
    pub worst_seed: Option<u64>,
    pub tolerance: f64,
    pub per_radius: BTreeMap<String, RadiusStats>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusRecord {
    pub equation: String,
    pub parameter: Option<f64>,
    pub root: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Finding {
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub version: String,
    pub config_hash: String,
    pub table_hash: String,
    pub lambda_used: f64,
    pub mu_used: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: BTreeMap<String, CheckStats>,
    pub constants: BTreeMap<String, SharpConstant>,
    pub radii: BTreeMap<String, RadiusRecord>,
    pub findings: Vec<Finding>,
    pub metadata: Metadata,
}

impl VerifyReport {
    pub fn failures(&self) -> u64 {
        self.checks.values().map(|c| c.fail_count).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }
}

#[derive(Clone, Copy)]
enum Direction {
    /// Passes when `value.hi <= threshold + tol`.
    AtMost,
    /// Passes when `value.lo > threshold`.
    Exceeds,
}

#[derive(Default)]
struct Tally {
    checks: BTreeMap<String, BTreeMap<String, RadiusStats>>,
}

fn radius_key(r: f64) -> String {
    format!("{r}")
}

impl Tally {
    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        check: &str,
        r: f64,
        dir: Direction,
        tol: f64,
        value: ValueInterval,
        threshold: f64,
        seed: u64,
        detail: impl FnOnce() -> String,
    ) {
        let (margin, pass) = match dir {
            Direction::AtMost => (value.hi - threshold, value.hi - threshold <= tol),
            Direction::Exceeds => (threshold - value.lo, value.lo > threshold),
        };
        let stats = self.checks.entry(check.to_string()).or_default().entry(radius_key(r)).or_default();
        if pass {
            stats.pass_count += 1;
        } else {
            stats.fail_count += 1;
        }
        // NaN margins count as the worst possible
        let margin = if margin.is_nan() { f64::INFINITY } else { margin };
        if stats.worst.as_ref().is_none_or(|w| margin > w.margin) {
            stats.worst = Some(WorstCase { margin, value, threshold, seed, detail: detail() });
        }
    }

    fn record_error(&mut self, check: &str, r: f64, seed: u64, err: &Error) {
        let v = ValueInterval::point(f64::NAN);
        self.record(check, r, Direction::AtMost, 0.0, v, f64::NAN, seed, || format!("error: {err}"));
    }

    fn merge(&mut self, other: Tally) {
        for (check, per_r) in other.checks {
            let mine = self.checks.entry(check).or_default();
            for (r, stats) in per_r {
                mine.entry(r).or_default().merge(stats);
            }
        }
    }
}

/// Tolerance applied to each check.
pub fn tolerance(check: &str) -> f64 {
    match check {
        "rogosinski_partial" => ROGOSINSKI,
        "B_N" | "norm_f0_sq" | "A_f0" | "area_ratio" | "area_odds" => IDENTITY,
        BOHR_SHARPNESS => 0.0,
        _ => COMPOSITE,
    }
}

/// Whether `check` is stated at radius `r` for some `N`; `rn` holds `R_1..R_6`.
fn in_domain(check: FunctionalId, r: f64, rn: &[f64]) -> bool {
    let eps = 1e-15;
    match check {
        FunctionalId::BN => r <= BOHR_RADIUS + eps,
        FunctionalId::RogosinskiPartial => r <= ROGOSINSKI_RADIUS,
        FunctionalId::AreaRatio | FunctionalId::AreaOdds => r <= AREA_BOUND_RADIUS + eps,
        FunctionalId::ThmCLhs | FunctionalId::ThmDLhs | FunctionalId::Thm21Lhs | FunctionalId::Thm22Lhs => {
            r <= CRITICAL_RADIUS + eps
        }
        FunctionalId::BohrRogosinskiRN => rn.iter().any(|&rn| r <= rn),
        FunctionalId::NormF0Sq | FunctionalId::AF0 | FunctionalId::LemmaA => true,
    }
}

/// `S_r/pi` bound `(1 - a^2)^2 r^2 / (1 - a^2 r^2)^2` with `a = |a_0|`.
pub fn area_ratio_bound(a0: f64, r: f64) -> f64 {
    let b = 1.0 - a0 * a0;
    let d = 1.0 - a0 * a0 * r * r;
    b * b * r * r / (d * d)
}

/// `S_r/(pi - S_r)` bound `(1 - a^2)^2 r^2 / ((1 - r^2)(1 - a^4 r^2))`.
pub fn area_odds_bound(a0: f64, r: f64) -> f64 {
    let b = 1.0 - a0 * a0;
    b * b * r * r / ((1.0 - r * r) * (1.0 - a0.powi(4) * r * r))
}

struct Context<'a> {
    cfg: &'a SweepConfig,
    lambda: f64,
    mu: f64,
    /// `R_1..R_6`
    rn: Vec<f64>,
}

impl Context<'_> {
    fn domain(&self, check: FunctionalId, r: f64) -> bool {
        !self.cfg.enforce_domains || in_domain(check, r, &self.rn)
    }

    fn evaluate(&self, f: &TruncatedSeries, seed: u64, tally: &mut Tally) {
        for &r in &self.cfg.radii {
            if let Err(e) = self.evaluate_radius(f, r, seed, tally) {
                for &c in &self.cfg.checks {
                    if self.domain(c, r) {
                        tally.record_error(c.name(), r, seed, &e);
                    }
                }
            }
        }
    }

    fn evaluate_radius(&self, f: &TruncatedSeries, r: f64, seed: u64, t: &mut Tally) -> Result<()> {
        let sums = RadialSums::new(f, r, ROGOSINSKI_MAX_N)?;
        let a0 = sums.a0;
        let b = 1.0 - a0 * a0;
        let pointwise_checks: Vec<FunctionalId> =
            self.cfg.checks.iter().copied().filter(|c| c.is_pointwise() && self.domain(*c, r)).collect();

        for &check in self.cfg.checks.iter().filter(|c| !c.is_pointwise() && self.domain(**c, r)) {
            let name = check.name();
            let tol = tolerance(name);
            let at_most = |t: &mut Tally, v: ValueInterval, th: f64, d: &dyn Fn() -> String| {
                t.record(name, r, Direction::AtMost, tol, v, th, seed, d)
            };
            match check {
                FunctionalId::BN => at_most(t, sums.bohr[0], 1.0, &String::new),
                FunctionalId::NormF0Sq => at_most(t, sums.norm_f0_sq, b * r * r, &String::new),
                FunctionalId::AF0 => {
                    at_most(t, sums.bohr[2] + sums.a_refinement, b * r * r / (1.0 - r), &String::new)
                }
                FunctionalId::AreaRatio => at_most(t, sums.area_ratio, area_ratio_bound(a0, r), &String::new),
                FunctionalId::AreaOdds => match sums.area_odds() {
                    Ok(v) => at_most(t, v, area_odds_bound(a0, r), &String::new),
                    Err(e) => t.record_error(name, r, seed, &e),
                },
                FunctionalId::RogosinskiPartial => {
                    for n in 1..=ROGOSINSKI_MAX_N {
                        let v = rogosinski_partial_sup(f, n, r, self.cfg.angles)?;
                        at_most(t, ValueInterval::point(v), 1.0, &|| format!("N={n}"));
                    }
                }
                FunctionalId::LemmaA => {
                    for n in 1..=LEMMA_MAX_N {
                        let (lhs, rhs) = lemma_a_sides(f, n, r)?;
                        at_most(t, lhs, rhs.hi, &|| format!("N={n}"));
                    }
                }
                _ => unreachable!("pointwise checks are handled below"),
            }
        }

        if pointwise_checks.is_empty() {
            return Ok(());
        }
        let mut points: Vec<Complex64> = circle_points(r, self.cfg.angles).collect();
        if self.cfg.angles % 2 == 1 {
            points.push(Complex64::new(-r, 0.0));
        }
        for z in points {
            let (m, d) = pointwise(f, z)?;
            let theta = z.arg();
            for &check in &pointwise_checks {
                let name = check.name();
                let tol = tolerance(name);
                let mut rec = |v: ValueInterval, detail: String| {
                    t.record(name, r, Direction::AtMost, tol, v, 1.0, seed, || detail)
                };
                match check {
                    FunctionalId::BohrRogosinskiRN => {
                        for (i, &rn) in self.rn.iter().enumerate() {
                            let n = i + 1;
                            if !self.cfg.enforce_domains || r <= rn {
                                rec(m + sums.bohr[n], format!("N={n} theta={theta:.6}"));
                            }
                        }
                    }
                    FunctionalId::ThmCLhs => rec(sums.thm_c(m, d), format!("theta={theta:.6}")),
                    FunctionalId::ThmDLhs => rec(sums.thm_d(m, d), format!("theta={theta:.6}")),
                    FunctionalId::Thm21Lhs => rec(sums.thm21(m, d, self.lambda), format!("theta={theta:.6}")),
                    FunctionalId::Thm22Lhs => match sums.thm22(m, d, self.mu) {
                        Ok(v) => rec(v, format!("theta={theta:.6}")),
                        Err(e) => t.record_error(name, r, seed, &e),
                    },
                    _ => unreachable!("radial checks are handled above"),
                }
            }
        }
        Ok(())
    }

    /// Validity of the majorant over `a` plus the one-sided excess probe.
    fn sharpness(&self, kind: SharpKind, constant: f64, t: &mut Tally) -> Result<()> {
        let name = match kind {
            SharpKind::LambdaThm21 => SHARPNESS_THM21,
            _ => SHARPNESS_THM22,
        };
        let r = kind.radius();
        let (worst, at) = validity_margin(kind, constant, VALIDITY_GRID)?;
        t.record(name, r, Direction::AtMost, COMPOSITE, ValueInterval::point(1.0 + worst), 1.0, 0, || {
            format!("validity a={at:.6} const={constant}")
        });
        let m = minimize_admissible(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL)?;
        let probed = constant + PROBE_EPS;
        let excess = probe_at(kind, m.argmin, probed)?;
        t.record(name, r, Direction::Exceeds, 0.0, ValueInterval::point(1.0 + excess), 1.0, 0, || {
            format!("probe a={:.6} const={probed}", m.argmin)
        });
        Ok(())
    }

    /// `B_0(f_a, 1/(1+2a) + eps) > 1` on the stored coefficients alone.
    fn bohr_sharpness(&self, t: &mut Tally) -> Result<()> {
        for a in [0.2, 0.5, 0.9] {
            let r = 1.0 / (1.0 + 2.0 * a) + PROBE_EPS;
            let f = moebius_series(a, self.cfg.truncation_order)?;
            let v = RadialSums::new(&f, r, 0)?.bohr[0];
            t.record(BOHR_SHARPNESS, r, Direction::Exceeds, 0.0, v, 1.0, 0, || format!("a={a}"));
        }
        Ok(())
    }
}

/// Sharp constants for all kinds with the exact cross-checks filled in.
pub fn compute_constants() -> Result<BTreeMap<String, SharpConstant>> {
    SharpKind::ALL
        .into_iter()
        .map(|k| Ok((k.name().to_string(), sharp_constant(k, DEFAULT_GRID, DEFAULT_REFINE_TOL)?)))
        .collect()
}

/// `R_N`, `R'_N` for `N = 1..=8` and the quadratic's root.
pub fn compute_radii() -> Result<BTreeMap<String, RadiusRecord>> {
    let mut eqs = Vec::new();
    for n in 1..=ROGOSINSKI_MAX_N as u32 {
        eqs.push(RadiusEquation::RogosinskiRN(n));
        eqs.push(RadiusEquation::RogosinskiRpN(n));
    }
    eqs.push(RadiusEquation::ThmCQuadratic);
    eqs.into_iter()
        .map(|eq| {
            let s = solve_radius(eq, RADIUS_TOL)?;
            let parameter = match eq {
                RadiusEquation::RogosinskiRN(n) | RadiusEquation::RogosinskiRpN(n) => Some(n as f64),
                RadiusEquation::BohrClassical(a) => Some(a),
                RadiusEquation::ThmCQuadratic => None,
            };
            let record =
                RadiusRecord { equation: eq.name().to_string(), parameter, root: s.root, residual: s.residual };
            Ok((eq.to_string(), record))
        })
        .collect()
}

fn findings(constants: &BTreeMap<String, SharpConstant>) -> Vec<Finding> {
    let mut out: Vec<Finding> = constants
        .values()
        .filter_map(|c| c.cross_check())
        .map(|f| Finding { subject: format!("{}:{}", f.kind, f.poly_id), detail: f.detail })
        .collect();
    for a in audit() {
        for m in &a.mismatches {
            out.push(Finding {
                subject: format!("table:{}", a.id),
                detail: format!(
                    "coefficient of t^{}: printed {} + {} sqrt17, rebuilt {} + {} sqrt17",
                    m.power, m.displayed[0], m.displayed[1], m.expected[0], m.expected[1]
                ),
            });
        }
    }
    out
}

/// Runs every configured check plus the always-on sharpness checks.
pub fn run_suite(cfg: &SweepConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let constants = compute_constants()?;
    let lambda = cfg.lambda.unwrap_or(constants[SharpKind::LambdaThm21.name()].value);
    let mu = cfg.mu.unwrap_or(constants[SharpKind::MuThm22.name()].value);
    let rn = (1..=LEMMA_MAX_N as u32)
        .map(|n| solve_radius(RadiusEquation::RogosinskiRN(n), RADIUS_TOL).map(|s| s.bracket[0]))
        .collect::<Result<Vec<_>>>()?;
    let ctx = Context { cfg, lambda, mu, rn };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    let per_sample: Vec<Result<Tally>> = pool.install(|| {
        (0..cfg.samples)
            .into_par_iter()
            .map(|i| {
                let sample = cfg.sample(i)?;
                let f = schur_to_series(&sample, cfg.truncation_order)?;
                let mut t = Tally::default();
                ctx.evaluate(&f, sample.seed, &mut t);
                Ok(t)
            })
            .collect()
    });
    let mut tally = Tally::default();
    for t in per_sample {
        tally.merge(t?);
    }
    ctx.sharpness(SharpKind::LambdaThm21, lambda, &mut tally)?;
    ctx.sharpness(SharpKind::MuThm22, mu, &mut tally)?;
    ctx.bohr_sharpness(&mut tally)?;

    let checks = tally
        .checks
        .into_iter()
        .map(|(name, per_radius)| {
            let worst = per_radius.values().filter_map(|s| s.worst.as_ref()).max_by(|a, b| a.margin.total_cmp(&b.margin));
            let stats = CheckStats {
                pass_count: per_radius.values().map(|s| s.pass_count).sum(),
                fail_count: per_radius.values().map(|s| s.fail_count).sum(),
                worst_margin: worst.map(|w| w.margin).unwrap_or(f64::NEG_INFINITY),
                worst_seed: worst.map(|w| w.seed),
                tolerance: tolerance(&name),
                per_radius,
            };
            (name, stats)
        })
        .collect();
    let findings = findings(&constants);
    Ok(VerifyReport {
        checks,
        constants,
        radii: compute_radii()?,
        findings,
        metadata: Metadata {
            version: env!("CARGO_PKG_VERSION").to_string(),
            config_hash: cfg.hash(),
            table_hash: table_hash(),
            lambda_used: lambda,
            mu_used: mu,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(samples: usize) -> SweepConfig {
        SweepConfig { samples, workers: 2, ..SweepConfig::default() }
    }

    #[test]
    fn zero_samples_is_a_config_error() {
        assert!(matches!(run_suite(&small(0)), Err(Error::Config(_))));
        let cfg = SweepConfig { checks: vec![], ..small(1) };
        assert!(cfg.validate().is_err());
        let cfg = SweepConfig { radii: vec![1.0], ..small(1) };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn moebius_half_is_extremal_for_the_bohr_sum() {
        let cfg = SweepConfig {
            radii: vec![0.5],
            checks: vec![FunctionalId::BN],
            fixed_params: Some(vec![[0.5, 0.0], [-1.0, 0.0]]),
            enforce_domains: false,
            ..small(1)
        };
        let rep = run_suite(&cfg).unwrap();
        let bn = &rep.checks["B_N"];
        assert_eq!((bn.pass_count, bn.fail_count), (1, 0));
        assert!(bn.worst_margin.abs() < 1e-12, "{}", bn.worst_margin);
    }

    #[test]
    fn counts_match_the_domains() {
        let cfg = SweepConfig { checks: vec![FunctionalId::BN, FunctionalId::ThmCLhs], ..small(3) };
        let rep = run_suite(&cfg).unwrap();
        // B_N at 0.1, 0.25, r*, 1/3; thmC at 0.1, 0.25, r*, 64 angles each
        assert_eq!(rep.checks["B_N"].pass_count, 3 * 4);
        assert_eq!(rep.checks["thmC_lhs"].pass_count, 3 * 3 * 64);
        assert!(rep.all_passed());
    }

    #[test]
    fn reports_are_deterministic_across_worker_counts() {
        let a = run_suite(&SweepConfig { workers: 1, ..small(20) }).unwrap();
        let b = run_suite(&SweepConfig { workers: 4, ..small(20) }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn sample_seeds_differ() {
        let cfg = small(1);
        let seeds: std::collections::BTreeSet<u64> = (0..1000).map(|i| cfg.sample_seed(i)).collect();
        assert_eq!(seeds.len(), 1000);
    }
}
