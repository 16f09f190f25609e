//! Exact arithmetic in Q(sqrt 17) for the published stationarity and root
//! polynomials.
//!
//! The printed coefficients live in [`table`] verbatim. [`derived`] rebuilds
//! the same polynomials from `A_3`, `E_3`, `L_a` and `Q_10` so misprints show
//! up as exact disagreements, and [`roots`] brackets roots by bisection on
//! exact signs.

pub mod constants;
pub mod derived;
pub mod poly;
pub mod quad;
pub mod roots;
pub mod table;

pub use constants::{
    a3_eval, e3_eval, stationarity_constant, stationarity_constant_from, thmf_lambda1, thmf_lambda2,
    with_stationarity_function, StationarityKind,
};
pub use derived::{audit, derived, polynomial, CoefficientMismatch, PolyAudit, Source};
pub use poly::QuadPoly;
pub use quad::{rat_from_f64, rat_to_f64, QuadExt};
pub use roots::{dyadic_width, isolate_root, isolate_root_unit, isolate_roots_grid, width_from_f64, RootBracket};
pub use table::{displayed, table_hash, table_json, PolyId};

/// `(221 - 43 sqrt 17)/64`, the coefficient of the linear area term.
pub fn area_coefficient_exact() -> QuadExt {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    QuadExt::new(
        BigRational::new(BigInt::from(221), BigInt::from(64)),
        BigRational::new(BigInt::from(-43), BigInt::from(64)),
    )
}

/// `(sqrt 17 - 3)/4`, the common radius of the `S_r` inequalities.
pub fn critical_radius_exact() -> QuadExt {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    QuadExt::new(
        BigRational::new(BigInt::from(-3), BigInt::from(4)),
        BigRational::new(BigInt::from(1), BigInt::from(4)),
    )
}
