//! Functional values along a radius grid, for plotting.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functionals::{evaluate, EvalParams, FunctionalId};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub functional: FunctionalId,
    pub r: f64,
    pub value_lo: f64,
    pub value_hi: f64,
}

/// `points` radii evenly spaced on `[r_min, r_max]`.
pub fn radius_grid(r_min: f64, r_max: f64, points: usize) -> Result<Vec<f64>> {
    if !(0.0 <= r_min && r_min <= r_max && r_max < 1.0) || points == 0 {
        return Err(Error::Config(format!("bad radius grid [{r_min}, {r_max}] with {points} points")));
    }
    if points == 1 {
        return Ok(vec![r_min]);
    }
    let h = (r_max - r_min) / (points - 1) as f64;
    Ok((0..points).map(|k| r_min + k as f64 * h).collect())
}

/// Evaluates each functional at `z = r e^{i theta}` for every radius.
pub fn sweep(
    f: &TruncatedSeries,
    functionals: &[FunctionalId],
    radii: &[f64],
    theta: f64,
    params: &EvalParams,
) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(functionals.len() * radii.len());
    for &id in functionals {
        for &r in radii {
            let v = evaluate(id, f, Complex64::from_polar(r, theta), params)?;
            rows.push(SweepRow { functional: id, r, value_lo: v.lo, value_hi: v.hi });
        }
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[SweepRow]) -> Result<Vec<u8>> {
    let err = |e: csv::Error| Error::Config(format!("csv output: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["functional", "r", "value_lo", "value_hi"]).map_err(err)?;
    for row in rows {
        w.write_record([row.functional.name(), &row.r.to_string(), &row.value_lo.to_string(), &row.value_hi.to_string()])
            .map_err(err)?;
    }
    w.into_inner().map_err(|e| Error::Config(format!("csv output: {e}")))
}
