//! Command-line front end.
//!
//! Exit codes: 0 success, 1 some inequality check failed, 2 usage or input error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    audit, isolate_roots_grid, polynomial, rat_from_f64, table_json, width_from_f64, PolyId, Source,
};
use crate::extremal::{sharp_constant, SharpKind, DEFAULT_GRID, DEFAULT_REFINE_TOL};
use crate::functionals::{evaluate, lemma_a_sides, EvalParams, FunctionalId};
use crate::harness::sweep::{radius_grid, rows_to_csv, sweep};
use crate::harness::{
    compute_radii, default_workers, emit_radii, emit_report, run_suite, ReportFormat, SweepConfig,
};
use crate::radius::{solve_radius, RadiusEquation};
use crate::series::{moebius_series, schur_to_series, SchurSample, TruncatedSeries, DEFAULT_ORDER};
use crate::tolerances::RADIUS_TOL;

#[derive(Parser, Debug)]
#[command(name = "bohr", version, about = "Bohr-type inequalities for bounded analytic functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sharp constants from optimizing over the Möbius family, with exact cross-checks.
    Constants {
        /// lambda_thm21, mu_thm22, lambda1_thmF or lambda2_thmF; all when omitted.
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        grid: usize,
        #[arg(long, default_value_t = DEFAULT_REFINE_TOL)]
        refine_tol: f64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Roots of the radius equations.
    Radii {
        /// rogosinski_RN, rogosinski_RpN, thmC_quadratic or bohr_classical; all standard ones when omitted.
        #[arg(long)]
        equation: Option<String>,
        #[arg(long = "N")]
        n: Option<u32>,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long, default_value_t = RADIUS_TOL)]
        tol: f64,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Randomized verification over the Schur class.
    Verify(VerifyArgs),
    /// Print, evaluate, audit or root-isolate the built-in polynomials.
    Poly(PolyArgs),
    /// Functional values along a radius grid as CSV.
    Sweep(SweepArgs),
    /// Evaluate one functional for one function at one point.
    Eval(EvalArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Comma-separated radii; the standard set when omitted.
    #[arg(long, value_delimiter = ',')]
    radii: Option<Vec<f64>>,
    /// Comma-separated functional names; all when omitted.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, default_value_t = 64)]
    angles: usize,
    /// Worker threads; defaults to $BOHR_WORKERS or the number of CPUs.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value_t = 0.95)]
    sample_radius: f64,
    /// Override the computed lambda.
    #[arg(long)]
    lambda: Option<f64>,
    /// Override the computed mu.
    #[arg(long)]
    mu: Option<f64>,
    /// Evaluate every check at every radius, even outside its stated range.
    #[arg(long)]
    no_domains: bool,
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Polynomial name, e.g. psi1, a2, e3_poly, thmf_quintic.
    #[arg(long)]
    id: Option<String>,
    #[arg(long, default_value = "displayed")]
    source: String,
    /// Evaluate at this point (`p/q` or decimal).
    #[arg(long)]
    eval: Option<String>,
    /// Bracket every sign change on (0, 1).
    #[arg(long)]
    isolate: bool,
    #[arg(long, default_value_t = 1e-12)]
    width: f64,
    /// Print the whole coefficient table as JSON.
    #[arg(long)]
    export_table: bool,
    /// Compare printed polynomials with their rebuilt forms.
    #[arg(long)]
    audit: bool,
}

#[derive(Args, Debug, Clone)]
struct FunctionSource {
    /// Use f(z) = (a - z)/(1 - a z).
    #[arg(long)]
    moebius: Option<f64>,
    /// Schur parameters as `re,im;re,im;...`.
    #[arg(long)]
    schur: Option<String>,
    /// JSON series file with `coeffs`, `order` and `tail`.
    #[arg(long)]
    series: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Comma-separated functional names.
    #[arg(long, value_delimiter = ',', default_value = "B_N")]
    functional: Vec<String>,
    #[command(flatten)]
    function: FunctionSource,
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    #[arg(long, default_value_t = 0.5)]
    r_max: f64,
    #[arg(long, default_value_t = 51)]
    points: usize,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    theta: f64,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long)]
    functional: String,
    #[command(flatten)]
    function: FunctionSource,
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long = "N", default_value_t = 1)]
    n: usize,
    /// Quadratic area coefficient; the computed sharp value when omitted.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long, default_value_t = 64)]
    angles: usize,
}

impl ParamArgs {
    fn resolve(&self, needs: &[FunctionalId]) -> Result<EvalParams> {
        let sharp = |kind: SharpKind, given: Option<f64>, used: bool| -> Result<f64> {
            match given {
                Some(v) => Ok(v),
                None if used => Ok(sharp_constant(kind, DEFAULT_GRID, DEFAULT_REFINE_TOL)?.value),
                None => Ok(0.0),
            }
        };
        Ok(EvalParams {
            n: self.n,
            lambda: sharp(SharpKind::LambdaThm21, self.lambda, needs.contains(&FunctionalId::Thm21Lhs))?,
            mu: sharp(SharpKind::MuThm22, self.mu, needs.contains(&FunctionalId::Thm22Lhs))?,
            angles: self.angles,
        })
    }
}

impl FunctionSource {
    fn load(&self) -> Result<TruncatedSeries> {
        match (self.moebius, &self.schur, &self.series) {
            (Some(a), None, None) => moebius_series(a, self.order),
            (None, Some(s), None) => schur_to_series(&SchurSample::new(parse_params(s)?, 0)?, self.order),
            (None, None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                serde_json::from_str(&text).map_err(|e| Error::InvalidSeries(e.to_string()))
            }
            _ => Err(Error::Config("give exactly one of --moebius, --schur, --series".into())),
        }
    }
}

fn parse_params(s: &str) -> Result<Vec<Complex64>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let parts: Vec<&str> = p.split(',').map(str::trim).collect();
            let num = |x: &str| x.parse::<f64>().map_err(|_| Error::Config(format!("bad number `{x}` in --schur")));
            match parts.as_slice() {
                [re] => Ok(Complex64::new(num(re)?, 0.0)),
                [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
                _ => Err(Error::Config(format!("bad Schur parameter `{p}`"))),
            }
        })
        .collect()
}

fn parse_point(s: &str) -> Result<BigRational> {
    if let Ok(q) = s.parse::<BigRational>() {
        return Ok(q);
    }
    let x: f64 = s.parse().map_err(|_| Error::Config(format!("cannot parse `{s}` as a number")))?;
    Ok(rat_from_f64(x))
}

fn json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("serializable");
    out.push(b'\n');
    out
}

enum Outcome {
    Print(Vec<u8>),
    /// Output plus "some check failed".
    Failed(Vec<u8>),
}

fn constants(kind: Option<String>, grid: usize, refine_tol: f64, format: &str) -> Result<Outcome> {
    let kinds = match kind {
        Some(k) => vec![k.parse::<SharpKind>()?],
        None => SharpKind::ALL.to_vec(),
    };
    let results = kinds.iter().map(|&k| sharp_constant(k, grid, refine_tol)).collect::<Result<Vec<_>>>()?;
    let out = match format.parse::<ReportFormat>()? {
        ReportFormat::Json if results.len() == 1 => json(&results[0]),
        ReportFormat::Json => {
            json(&results.iter().map(|r| (r.kind.name(), r)).collect::<BTreeMap<_, _>>())
        }
        _ => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!(
                    "{} = {:.10} at a = {:.10} (stationarity residual {:.2e}, printed-root residual {}, rebuilt-root residual {})\n",
                    r.kind,
                    r.value,
                    r.argmin_a,
                    r.residual_stationarity,
                    r.residual_exact_root.map_or("n/a".into(), |x| format!("{x:.2e}")),
                    r.residual_derived_root.map_or("n/a".into(), |x| format!("{x:.2e}")),
                ));
                if let Some(f) = r.cross_check() {
                    s.push_str(&format!("  finding {}: {}\n", f.poly_id, f.detail));
                }
            }
            s.into_bytes()
        }
    };
    Ok(Outcome::Print(out))
}

fn radii(equation: Option<String>, n: Option<u32>, a: Option<f64>, tol: f64, format: &str) -> Result<Outcome> {
    let format = format.parse::<ReportFormat>()?;
    match equation {
        Some(name) => {
            let eq = RadiusEquation::from_name(&name, n, a)?;
            let sol = solve_radius(eq, tol)?;
            let out = match format {
                ReportFormat::Json => json(&sol),
                ReportFormat::Csv => {
                    let p = n.map(|n| n.to_string()).or(a.map(|a| a.to_string())).unwrap_or_default();
                    format!("equation,parameter,root,residual\n{},{p},{},{}\n", eq.name(), sol.root, format!("{:e}", sol.residual))
                        .into_bytes()
                }
                ReportFormat::Text => format!("{eq} = {:.15}\n", sol.root).into_bytes(),
            };
            Ok(Outcome::Print(out))
        }
        None => Ok(Outcome::Print(emit_radii(&compute_radii()?, format)?)),
    }
}

fn verify(v: VerifyArgs) -> Result<Outcome> {
    let format = v.format.parse::<ReportFormat>()?;
    let defaults = SweepConfig::default();
    let checks = match v.checks {
        Some(c) => c.iter().map(|s| s.parse()).collect::<Result<Vec<FunctionalId>>>()?,
        None => defaults.checks.clone(),
    };
    let cfg = SweepConfig {
        samples: v.samples,
        seed: v.seed,
        max_degree: v.max_degree,
        truncation_order: v.order,
        radii: v.radii.unwrap_or(defaults.radii),
        checks,
        angles: v.angles,
        workers: v.workers.unwrap_or_else(default_workers),
        sample_radius: v.sample_radius,
        fixed_params: None,
        enforce_domains: !v.no_domains,
        lambda: v.lambda,
        mu: v.mu,
    };
    let report = run_suite(&cfg)?;
    let bytes = emit_report(&report, format)?;
    let bytes = match v.output {
        Some(path) => {
            std::fs::write(&path, &bytes)
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            format!("{} checks, {} failures; report written to {}\n", report.checks.len(), report.failures(), path.display())
                .into_bytes()
        }
        None => bytes,
    };
    Ok(if report.all_passed() { Outcome::Print(bytes) } else { Outcome::Failed(bytes) })
}

#[derive(Serialize)]
struct PolyOut {
    id: String,
    source: String,
    degree: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct EvalOut {
    id: String,
    source: String,
    at: String,
    value: f64,
    exact: String,
}

fn poly(p: PolyArgs) -> Result<Outcome> {
    if p.export_table {
        return Ok(Outcome::Print(format!("{}\n", table_json()).into_bytes()));
    }
    if p.audit {
        return Ok(Outcome::Print(json(&audit())));
    }
    let id: PolyId = p.id.as_deref().ok_or_else(|| Error::Config("poly needs --id, --audit or --export-table".into()))?.parse()?;
    let source: Source = p.source.parse()?;
    let poly = polynomial(id, source)
        .ok_or_else(|| Error::Config(format!("{id} has no {} form", source.name())))?;
    if let Some(at) = &p.eval {
        let t = parse_point(at)?;
        let v = poly.eval(&t);
        let out = EvalOut { id: id.name().into(), source: source.name().into(), at: t.to_string(), value: v.to_f64(), exact: v.to_string() };
        return Ok(Outcome::Print(json(&out)));
    }
    if p.isolate {
        if !(p.width > 0.0) {
            return Err(Error::Config("--width must be positive".into()));
        }
        let label = format!("{}:{}", id.name(), source.name());
        let roots = isolate_roots_grid(&poly, &label, 64, &width_from_f64(p.width))?;
        return Ok(Outcome::Print(json(&roots)));
    }
    let out = PolyOut {
        id: id.name().into(),
        source: source.name().into(),
        degree: poly.degree(),
        coeffs: poly.coeffs().iter().map(|c| c.to_string()).collect(),
    };
    Ok(Outcome::Print(json(&out)))
}

fn sweep_cmd(s: SweepArgs) -> Result<Outcome> {
    let ids = s.functional.iter().map(|x| x.parse()).collect::<Result<Vec<FunctionalId>>>()?;
    let f = s.function.load()?;
    let params = s.params.resolve(&ids)?;
    let rows = sweep(&f, &ids, &radius_grid(s.r_min, s.r_max, s.points)?, s.theta, &params)?;
    Ok(Outcome::Print(rows_to_csv(&rows)?))
}

#[derive(Serialize)]
struct EvalResult {
    functional: FunctionalId,
    r: f64,
    theta: f64,
    value: crate::functionals::ValueInterval,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<f64>,
}

fn eval_cmd(e: EvalArgs) -> Result<Outcome> {
    let id: FunctionalId = e.functional.parse()?;
    let f = e.function.load()?;
    let params = e.params.resolve(&[id])?;
    let z = Complex64::from_polar(e.r, e.theta);
    let value = evaluate(id, &f, z, &params)?;
    let rhs = match id {
        FunctionalId::LemmaA => Some(lemma_a_sides(&f, params.n, e.r)?.1.hi),
        _ => None,
    };
    let out = EvalResult {
        functional: id,
        r: e.r,
        theta: e.theta,
        value,
        rhs,
        lambda: (id == FunctionalId::Thm21Lhs).then_some(params.lambda),
        mu: (id == FunctionalId::Thm22Lhs).then_some(params.mu),
    };
    Ok(Outcome::Print(json(&out)))
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Constants { kind, grid, refine_tol, format } => constants(kind, grid, refine_tol, &format),
        Command::Radii { equation, n, a, tol, format } => radii(equation, n, a, tol, &format),
        Command::Verify(v) => verify(v),
        Command::Poly(p) => poly(p),
        Command::Sweep(s) => sweep_cmd(s),
        Command::Eval(e) => eval_cmd(e),
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match dispatch(cli) {
        Ok(Outcome::Print(bytes)) => {
            let _ = stdout.write_all(&bytes);
            0
        }
        Ok(Outcome::Failed(bytes)) => {
            let _ = stdout.write_all(&bytes);
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
