//! Numerical constants and the tolerance policy for inequality verdicts.
//!
//! A check passes when the certified upper bound of its left side is at most
//! `threshold + tolerance`.

/// `(sqrt 17 - 3)/4`, correctly rounded; the positive root of `2r^2 + 3r - 1`.
pub const CRITICAL_RADIUS: f64 = 0.28077640640441515;

/// `(221 - 43 sqrt 17)/64`, correctly rounded.
pub const AREA_COEFF: f64 = 0.6829134077881344;

/// Classical Bohr radius.
pub const BOHR_RADIUS: f64 = 1.0 / 3.0;

/// Rogosinski radius.
pub const ROGOSINSKI_RADIUS: f64 = 0.5;

/// Upper end of the range where the sharp `S_r/pi` bounds hold.
pub const AREA_BOUND_RADIUS: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Identities and single bounds evaluated in `f64` over ~256-term sums.
pub const IDENTITY: f64 = 1e-10;

/// Composite functionals (five or six summed terms).
pub const COMPOSITE: f64 = 1e-9;

/// Partial sums of the Rogosinski inequality.
pub const ROGOSINSKI: f64 = 1e-12;

/// Sharp-constant reproduction against published values.
pub const CONSTANT_VALUE: f64 = 1e-3;

/// Location of the minimizing parameter.
pub const ARGMIN: f64 = 1e-4;

/// Offset used by one-sided sharpness probes.
pub const PROBE_EPS: f64 = 1e-3;

/// Default bisection tolerance of the radius solver.
pub const RADIUS_TOL: f64 = 1e-12;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{area_coefficient_exact, critical_radius_exact};

    #[test]
    fn float_constants_match_exact_values() {
        assert_eq!(CRITICAL_RADIUS, critical_radius_exact().to_f64());
        assert_eq!(AREA_COEFF, area_coefficient_exact().to_f64());
        assert!((2.0 * CRITICAL_RADIUS * CRITICAL_RADIUS + 3.0 * CRITICAL_RADIUS - 1.0).abs() < 1e-16);
    }
}
