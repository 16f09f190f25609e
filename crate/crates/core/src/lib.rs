//! Bohr-type inequalities for bounded analytic functions on the unit disk.
//!
//! Truncated power series with certified tails ([`series`]), the Bohr,
//! Rogosinski and area functionals built on them ([`functionals`]), radius
//! equations ([`radius`]), the sharp constants of the area-refined
//! inequalities recovered by optimizing over the Möbius family
//! ([`extremal`]), exact arithmetic in `Q(sqrt 17)` ([`exact`]) and a
//! randomized verification harness ([`harness`]).

pub mod cli;
pub mod error;
pub mod exact;
pub mod extremal;
pub mod functionals;
pub mod harness;
pub mod numeric;
pub mod radius;
pub mod series;
pub mod tolerances;

pub use error::{Error, Result};
pub use functionals::{FunctionalId, ValueInterval};
pub use series::{moebius_series, SchurSample, TailKind, TruncatedSeries};
