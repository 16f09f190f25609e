use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{RadiusRecord, VerifyReport};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            _ => Err(Error::UnknownName { kind: "report format", value: s.to_string() }),
        }
    }
}

fn csv_error(e: impl std::fmt::Display) -> Error {
    Error::Config(format!("csv output: {e}"))
}

/// Serializes `value` as pretty JSON with a trailing newline.
pub(crate) fn json_bytes<T: serde::Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("report types serialize");
    out.push(b'\n');
    out
}

/// JSON: the whole report. CSV: one row per (check, radius) with the worst
/// evaluation. Text: a summary per check plus constants and findings.
pub fn emit_report(report: &VerifyReport, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => Ok(json_bytes(report)),
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["check_id", "radius", "value_lo", "value_hi", "threshold", "pass"]).map_err(csv_error)?;
            for (check, stats) in &report.checks {
                for (r, rs) in &stats.per_radius {
                    let (lo, hi, th) = match &rs.worst {
                        Some(w) => (w.value.lo, w.value.hi, w.threshold),
                        None => (f64::NAN, f64::NAN, f64::NAN),
                    };
                    let pass = if rs.fail_count == 0 { "true" } else { "false" };
                    w.write_record([check.as_str(), r, &lo.to_string(), &hi.to_string(), &th.to_string(), pass])
                        .map_err(csv_error)?;
                }
            }
            w.into_inner().map_err(csv_error)
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for (check, c) in &report.checks {
                let verdict = if c.fail_count == 0 { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{verdict} {check:<20} pass={:<8} fail={:<6} worst_margin={:+.3e} tol={:.0e}",
                    c.pass_count, c.fail_count, c.worst_margin, c.tolerance
                );
            }
            for (name, k) in &report.constants {
                let _ = writeln!(s, "constant {name:<14} {:.10} at a = {:.10}", k.value, k.argmin_a);
            }
            for f in &report.findings {
                let _ = writeln!(s, "finding {}: {}", f.subject, f.detail);
            }
            let _ = writeln!(
                s,
                "lambda = {} mu = {} table = {} config = {}",
                report.metadata.lambda_used, report.metadata.mu_used, report.metadata.table_hash, report.metadata.config_hash
            );
            Ok(s.into_bytes())
        }
    }
}

/// Radius records; CSV rows look like `rogosinski_RN,1,0.2360679774997...,residual`.
pub fn emit_radii(radii: &BTreeMap<String, RadiusRecord>, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => Ok(json_bytes(radii)),
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["equation", "parameter", "root", "residual"]).map_err(csv_error)?;
            for r in radii.values() {
                let p = r.parameter.map(|p| p.to_string()).unwrap_or_default();
                w.write_record([r.equation.as_str(), &p, &r.root.to_string(), &format!("{:e}", r.residual)])
                    .map_err(csv_error)?;
            }
            w.into_inner().map_err(csv_error)
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for (key, r) in radii {
                let _ = writeln!(s, "{key:<20} {:.15} (residual {:.1e})", r.root, r.residual);
            }
            Ok(s.into_bytes())
        }
    }
}
