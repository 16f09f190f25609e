use thiserror::Error;

/// Errors raised by the evaluators, solvers and the verification harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("radius {0} is outside [0, 1)")]
    RadiusOutOfRange(f64),

    #[error("parameter {name} = {value} is outside its admissible range {range}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("zero of a Blaschke factor must lie in the open unit disk, got modulus {0}")]
    ZeroOutsideDisk(f64),

    #[error("reciprocal of a series with vanishing constant term")]
    ZeroConstantTerm,

    #[error("S_r/pi upper bound {0} reaches 1; S_r/(pi - S_r) is undefined")]
    AreaOddsDomain(f64),

    #[error("partial sum of length {needed} needs coefficients beyond the truncation order {order}")]
    OrderTooLow { needed: usize, order: usize },

    #[error("no sign change of {what} on [{lo}, {hi}]")]
    NoSignChange { what: String, lo: String, hi: String },

    #[error("division by an exact zero: {0}")]
    ExactZeroDivision(&'static str),

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("unknown {kind} `{value}`")]
    UnknownName { kind: &'static str, value: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
