//! Second route to the stationarity and root polynomials.
//!
//! Everything here is computed from `A_3`/`E_3` and `L_a`/`Q_10` alone:
//!
//! * `A_3(a) = P(a) - 128 lambda (1-a)(1+a)^4 L(a)`, so `A_3'(a) = 0` reads
//!   `A_1(a) = 128 lambda (1+a)^3 A_2(a)` with `A_1 = -P'` and
//!   `A_2 = -[(3-5a) L + (1-a^2) L']`. For `E_3` the signs flip.
//! * Substituting `lambda = A_1/(128 (1+a)^3 A_2)` back gives
//!   `A_3 A_2 = P A_2 - (1-a^2) L A_1 = 8 Psi`.
//!
//! [`audit`] compares these with the printed table and lists every
//! disagreement.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::poly::QuadPoly;
use super::quad::QuadExt;
use super::table::{displayed, PolyId};

fn int_poly(cs: &[i64]) -> QuadPoly {
    QuadPoly::from_integers(cs)
}

/// `(3 - 5a) L + (1 - a^2) L'`: the bracket produced by differentiating `(1-a)(1+a)^4 L`.
fn stationarity_bracket(l: &QuadPoly) -> QuadPoly {
    int_poly(&[3, -5]).mul(l).add(&int_poly(&[1, 0, -1]).mul(&l.derivative()))
}

fn eighth() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(8))
}

fn minus_one() -> BigRational {
    BigRational::from_integer(BigInt::from(-1))
}

/// Derived version of `id`, when the table has one.
pub fn derived(id: PolyId) -> Option<QuadPoly> {
    let pa = displayed(PolyId::A3Poly);
    let la = displayed(PolyId::La);
    let pe = displayed(PolyId::E3Poly);
    let q10 = displayed(PolyId::Q10);
    let one_minus_a2 = int_poly(&[1, 0, -1]);
    let psi = |p: &QuadPoly, l: &QuadPoly, num: &QuadPoly, den: &QuadPoly| {
        p.mul(den).sub(&one_minus_a2.mul(l).mul(num)).scale_rational(&eighth())
    };
    match id {
        PolyId::A1 => Some(pa.derivative().scale_rational(&minus_one())),
        PolyId::A2 => Some(stationarity_bracket(&la).scale_rational(&minus_one())),
        PolyId::E1 => Some(pe.derivative()),
        PolyId::E2 => Some(stationarity_bracket(&q10)),
        PolyId::Psi1 => Some(psi(&pa, &la, &derived(PolyId::A1)?, &derived(PolyId::A2)?)),
        PolyId::Psi2 => Some(psi(&pe, &q10, &derived(PolyId::E1)?, &derived(PolyId::E2)?)),
        _ => None,
    }
}

/// Where a polynomial comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Displayed,
    Derived,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Displayed => "displayed",
            Source::Derived => "derived",
        }
    }
}

impl std::str::FromStr for Source {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "displayed" => Ok(Source::Displayed),
            "derived" => Ok(Source::Derived),
            other => Err(crate::error::Error::UnknownName { kind: "polynomial source", value: other.into() }),
        }
    }
}

/// Polynomial `id` from the requested source; `None` if there is no derived form.
pub fn polynomial(id: PolyId, source: Source) -> Option<QuadPoly> {
    match source {
        Source::Displayed => Some(displayed(id)),
        Source::Derived => derived(id),
    }
}

/// One printed coefficient that disagrees with the derived route.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientMismatch {
    pub power: usize,
    /// `p + q sqrt 17` as printed, as decimal strings.
    pub displayed: [String; 2],
    /// What the derived route predicts in the printed normalization.
    pub expected: [String; 2],
}

/// Comparison of one printed polynomial with its derived twin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolyAudit {
    pub id: PolyId,
    /// `derived = scale * displayed` on all matching coefficients.
    pub scale: String,
    pub mismatches: Vec<CoefficientMismatch>,
}

impl PolyAudit {
    pub fn consistent(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn pair(x: &QuadExt) -> [String; 2] {
    [x.p.to_string(), x.q.to_string()]
}

/// Compares `shown` with `truth` up to the most common coefficient ratio.
pub fn compare(id: PolyId, shown: &QuadPoly, truth: &QuadPoly) -> PolyAudit {
    let n = shown.coeffs().len().max(truth.coeffs().len());
    let ratios: Vec<Option<QuadExt>> = (0..n)
        .map(|i| {
            let (s, t) = (shown.coeff(i), truth.coeff(i));
            (!s.is_zero()).then(|| t.checked_div(&s).expect("nonzero"))
        })
        .collect();
    let mut best: Option<(QuadExt, usize)> = None;
    for r in ratios.iter().flatten() {
        let count = ratios.iter().flatten().filter(|x| *x == r).count();
        if best.as_ref().is_none_or(|(_, c)| count > *c) {
            best = Some((r.clone(), count));
        }
    }
    let scale = best.map(|(r, _)| r).unwrap_or_else(QuadExt::one);
    let inv = scale.inverse().unwrap_or_else(|_| QuadExt::one());
    let mismatches = (0..n)
        .filter_map(|i| {
            let (s, t) = (shown.coeff(i), truth.coeff(i));
            (&s * &scale != t).then(|| CoefficientMismatch {
                power: i,
                displayed: pair(&s),
                expected: pair(&(&t * &inv)),
            })
        })
        .collect();
    PolyAudit { id, scale: scale.to_string(), mismatches }
}

/// Audits every table entry that has a derived counterpart.
pub fn audit() -> Vec<PolyAudit> {
    [PolyId::A1, PolyId::A2, PolyId::E1, PolyId::E2, PolyId::Psi1, PolyId::Psi2]
        .into_iter()
        .map(|id| compare(id, &displayed(id), &derived(id).expect("derived form exists")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(id: PolyId) -> PolyAudit {
        audit().into_iter().find(|a| a.id == id).unwrap()
    }

    #[test]
    fn a1_e1_e2_match_exactly() {
        for id in [PolyId::A1, PolyId::E1, PolyId::E2] {
            let a = find(id);
            assert!(a.consistent(), "{id}: {:?}", a.mismatches);
            assert_eq!(a.scale, "1");
        }
    }

    #[test]
    fn a2_cubic_coefficient_is_flagged() {
        let a = find(PolyId::A2);
        assert_eq!(a.mismatches.len(), 1);
        let m = &a.mismatches[0];
        assert_eq!(m.power, 3);
        assert_eq!(m.displayed, ["79457".to_string(), "-1927".to_string()]);
        assert_eq!(m.expected, ["79457".to_string(), "-19271".to_string()]);
    }

    #[test]
    fn psi1_matches_up_to_sign() {
        let a = find(PolyId::Psi1);
        assert!(a.consistent());
        assert_eq!(a.scale, "-1");
    }

    #[test]
    fn psi2_quadratic_coefficient_is_flagged() {
        let a = find(PolyId::Psi2);
        assert_eq!(a.scale, "1");
        assert_eq!(a.mismatches.len(), 1);
        let m = &a.mismatches[0];
        assert_eq!(m.power, 2);
        // printed -32(-129741581 + 314668555 sqrt 17); derived -32(-1297411581 + 314668555 sqrt 17)
        assert_eq!(m.expected, [(-32i64 * -1297411581).to_string(), (-32i64 * 314668555).to_string()]);
    }
}
