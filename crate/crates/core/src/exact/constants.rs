//! Closed-form evaluations of the sharp constants and of `A_3`, `E_3`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::derived::{polynomial, Source};
use super::quad::{rat_to_f64, QuadExt};
use super::table::{displayed, PolyId};
use crate::error::{Error, Result};

/// Which stationarity ratio to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StationarityKind {
    /// `A_1(a) / (128 (1+a)^3 A_2(a))`
    Lambda,
    /// `E_1(a) / (128 (1+a)^3 E_2(a))`
    Mu,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Stationarity ratio at `a` built from the chosen polynomial source.
///
/// Numerator and denominator are exact; the single division is exact too and
/// only the final value is rounded.
pub fn stationarity_constant_from(kind: StationarityKind, a: &BigRational, source: Source) -> Result<f64> {
    let (num_id, den_id) = match kind {
        StationarityKind::Lambda => (PolyId::A1, PolyId::A2),
        StationarityKind::Mu => (PolyId::E1, PolyId::E2),
    };
    let num = polynomial(num_id, source).expect("stationarity polynomials have both sources").eval(a);
    let den = polynomial(den_id, source).expect("stationarity polynomials have both sources").eval(a);
    let one_plus = BigRational::one() + a;
    let den = &den * &(int(128) * &one_plus * &one_plus * &one_plus);
    if den.is_zero() {
        return Err(Error::ExactZeroDivision("stationarity denominator"));
    }
    Ok(num.checked_div(&den)?.to_f64())
}

/// Stationarity ratio from the derived `A_1, A_2` (resp. `E_1, E_2`).
pub fn stationarity_constant(kind: StationarityKind, a: &BigRational) -> Result<f64> {
    stationarity_constant_from(kind, a, Source::Derived)
}

/// `lambda_1(a) = 4 N(a) / (81 (1+a)^3 (3 - 5a))`.
pub fn thmf_lambda1(a: &BigRational) -> Result<f64> {
    let num = displayed(PolyId::ThmfLambda1Num).eval(a);
    let one_plus = BigRational::one() + a;
    let den = int(81) * &one_plus * &one_plus * &one_plus * (int(3) - int(5) * a);
    ratio(&(&num * &int(4)), &den)
}

/// `lambda_2(a) = N(a) / (162 (a+1)^2 (2a - 1))`.
pub fn thmf_lambda2(a: &BigRational) -> Result<f64> {
    let num = displayed(PolyId::ThmfLambda2Num).eval(a);
    let one_plus = BigRational::one() + a;
    let den = int(162) * &one_plus * &one_plus * (int(2) * a - int(1));
    ratio(&num, &den)
}

fn ratio(num: &QuadExt, den: &BigRational) -> Result<f64> {
    if num_traits::Zero::is_zero(den) {
        return Err(Error::ExactZeroDivision("closed-form constant denominator"));
    }
    Ok(num.checked_div(&QuadExt::rational(den.clone()))?.to_f64())
}

/// `(1 - a)(1 + a)^4` exactly.
fn weight(a: &BigRational) -> f64 {
    let one = BigRational::one();
    let p = &one + a;
    rat_to_f64(&((&one - a) * &p * &p * &p * &p))
}

/// `A_3(a) = P(a) - 128 lambda (1-a)(1+a)^4 L_a(a)`; polynomial parts exact.
pub fn a3_eval(a: &BigRational, lambda: f64) -> f64 {
    let p = displayed(PolyId::A3Poly).eval_f64(a);
    let l = displayed(PolyId::La).eval_f64(a);
    p - 128.0 * lambda * weight(a) * l
}

/// `E_3(a) = sum_k Q_k a^k - 128 mu (1-a)(1+a)^4 Q_10(a)`.
pub fn e3_eval(a: &BigRational, mu: f64) -> f64 {
    let p = displayed(PolyId::E3Poly).eval_f64(a);
    let l = displayed(PolyId::Q10).eval_f64(a);
    p - 128.0 * mu * weight(a) * l
}

/// `A_3` (resp. `E_3`) with the constant replaced by the stationarity
/// *function* of `a`, i.e. `P - (1-a^2) L A_1/A_2 = 8 Psi / A_2`, evaluated
/// exactly from the chosen source.
///
/// This is not `A_3` at a fixed constant. It is kept because the published
/// endpoint values of `A_3`/`E_3` are reproduced by it.
pub fn with_stationarity_function(kind: StationarityKind, a: &BigRational, source: Source) -> Result<f64> {
    let (p_id, l_id, n_id, d_id) = match kind {
        StationarityKind::Lambda => (PolyId::A3Poly, PolyId::La, PolyId::A1, PolyId::A2),
        StationarityKind::Mu => (PolyId::E3Poly, PolyId::Q10, PolyId::E1, PolyId::E2),
    };
    let get = |id| polynomial(id, source).unwrap_or_else(|| displayed(id)).eval(a);
    let (p, l, n, d) = (get(p_id), get(l_id), get(n_id), get(d_id));
    let one = BigRational::one();
    let w = QuadExt::rational(&one - a * a);
    let corr = (&(&w * &l) * &n).checked_div(&d)?;
    Ok((&p - &corr).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::quad::rat_from_f64;

    #[test]
    fn lambda_at_zero_is_the_ratio_of_constant_terms() {
        // A_1(0) / (128 A_2(0)) with A_1(0) = 128(-6311 + 1521 sqrt17), A_2(0) = 2008 - 488 sqrt17
        let s = 17f64.sqrt();
        let want = (-6311.0 + 1521.0 * s) / (2008.0 - 488.0 * s);
        let got = stationarity_constant(StationarityKind::Lambda, &int(0)).unwrap();
        assert!((got - want).abs() < 1e-9 * want.abs(), "{got} vs {want}");
        assert!(got.is_finite());
    }

    #[test]
    fn displayed_and_derived_agree_at_zero() {
        for kind in [StationarityKind::Lambda, StationarityKind::Mu] {
            let d = stationarity_constant_from(kind, &int(0), Source::Displayed).unwrap();
            let e = stationarity_constant_from(kind, &int(0), Source::Derived).unwrap();
            assert_eq!(d, e);
        }
    }

    #[test]
    fn lambda_term_vanishes_at_one() {
        assert_eq!(a3_eval(&int(1), 18.0), a3_eval(&int(1), 1e6));
        assert_eq!(e3_eval(&int(1), 16.0), e3_eval(&int(1), 0.0));
    }

    #[test]
    fn thmf_formulas_at_published_roots() {
        let l1 = thmf_lambda1(&rat_from_f64(0.567284)).unwrap();
        let l2 = thmf_lambda2(&rat_from_f64(0.537869)).unwrap();
        assert!((l1 - 18.6095).abs() < 1e-3, "{l1}");
        assert!((l2 - 16.4618).abs() < 1e-3, "{l2}");
    }

    #[test]
    fn thmf_lambda2_pole() {
        assert!(thmf_lambda2(&BigRational::new(1.into(), 2.into())).is_err());
    }
}
