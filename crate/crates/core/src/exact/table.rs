//! Published polynomial coefficients, transcribed verbatim.
//!
//! Each entry is `mult * (p + q sqrt 17)` exactly as printed, including the
//! printed multiplier, so the table can be read against the source line by
//! line. Nothing here is corrected: misprints are detected by
//! [`super::derived::audit`], never patched in place.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::poly::QuadPoly;
use super::quad::QuadExt;
use crate::error::Error;

#[derive(Debug, Clone, Copy)]
struct Entry {
    mult: i64,
    p: i64,
    q: i64,
}

const fn e(mult: i64, p: i64, q: i64) -> Entry {
    Entry { mult, p, q }
}

/// Stationary-point polynomial for the `S_r/pi` inequality, root a_* ~ 0.600976.
const PSI1: [Entry; 13] = [
    e(2048, -169479, 41105),              // t^0
    e(64, -74661865, 18108159),           // t^1
    e(-64, -470704167, 114162545),        // t^2
    e(16, -698169901, 169331035),         // t^3
    e(16, -9949839967, 2413190649),       // t^4
    e(-172, -914721543, 221852561),       // t^5
    e(1, 298599878708, -72421108204),     // t^6
    e(1, -277864274087, 67391985393),     // t^7
    e(1, -376869563493, 91404295139),     // t^8
    e(-4, -40230249983, 9757268825),      // t^9
    e(1, 363756131186, -88223820638),     // t^10
    e(2, -35641396573, 8644308395),       // t^11
    e(1, -94566008398, 22935625954),      // t^12
];

/// Stationary-point polynomial for the `S_r/(pi - S_r)` inequality, root a_** ~ 0.565671.
const PSI2: [Entry; 13] = [
    e(128, -12782703, 3100265),           // t^0
    e(64, -207084487, 50225361),          // t^1
    e(-32, -129741581, 314668555),        // t^2
    e(1, 32440299472, -7867928752),       // t^3
    e(16, -10605671261, 2572253099),      // t^4
    e(1, 85784031284, -20805683692),      // t^5
    e(1, 197798732932, -47973239324),     // t^6
    e(1, -193832516055, 47011290433),     // t^7
    e(1, -132672807253, 32177882227),     // t^8
    e(1, 75432873692, -18295159172),      // t^9
    e(1, 170513297282, -41355549134),     // t^10
    e(1, -33414320906, 8104163206),       // t^11
    e(2, -22164247583, 5375619641),       // t^12
];

/// Numerator of the stationarity ratio for lambda.
const A1: [Entry; 9] = [
    e(128, -6311, 1521),                  // a^0
    e(32, -459367, 111409),               // a^1
    e(48, 368037, -89251),                // a^2
    e(16, 6825181, -1655339),             // a^3
    e(1280, -44509, 10795),               // a^4
    e(6, -46228497, 11212055),            // a^5
    e(7, -2654823, 643889),               // a^6
    e(32, 7818303, -1896217),             // a^7
    e(36, 4165553, -1010295),             // a^8
];

/// Denominator factor of the stationarity ratio for lambda.
const A2: [Entry; 4] = [
    e(1, 2008, -488),                     // a^0
    e(1, 33442, -8110),                   // a^1
    e(3, -36847, 8937),                   // a^2
    e(1, 79457, -1927),                   // a^3
];

/// Polynomial part of A_3 (everything except the `-128 lambda (1-a)(1+a)^4 L_a` term).
const A3_POLY: [Entry; 10] = [
    e(64, -11563, 2829),                  // a^0
    e(-128, -6311, 1521),                 // a^1
    e(1, 7349872, -1782544),              // a^2
    e(16, -368037, 89251),                // a^3
    e(4, -6825181, 1655339),              // a^4
    e(-256, -44509, 10795),               // a^5
    e(1, 46228497, -11212055),            // a^6
    e(1, 2654823, -643889),               // a^7
    e(4, -7818303, 1896217),              // a^8
    e(4, -4165553, 1010295),              // a^9
];

/// L_a.
const L_A: [Entry; 3] = [
    e(1, 3580, -868),                     // a^0
    e(4, -3187, 773),                     // a^1
    e(1, 11351, -2753),                   // a^2
];

/// Numerator of the stationarity ratio for mu.
const E1: [Entry; 9] = [
    e(1, 321568, -77024),                 // a^0
    e(8, -1166421, 282995),               // a^1
    e(1, 2287452, -554244),               // a^2
    e(16, -974531, 236341),               // a^3
    e(-40, -181177, 43951),               // a^4
    e(1, 88788654, -21534594),            // a^5
    e(7, -2416805, 586147),               // a^6
    e(32, -3664887, 888865),              // a^7
    e(36, -1952633, 473583),              // a^8
];

/// Denominator factor of the stationarity ratio for mu.
const E2: [Entry; 4] = [
    e(8, -251, 61),                       // a^0
    e(1, -33442, 8110),                   // a^1
    e(-3, -36847, 8937),                  // a^2
    e(7, -11351, 2753),                   // a^3
];

/// Q_0..Q_9: polynomial part of E_3, coefficient of a^k is Q_k.
const E3_POLY: [Entry; 10] = [
    e(1, 2689648, -651024),               // Q_0
    e(1, 321568, -77024),                 // Q_1
    e(4, -1166421, 282995),               // Q_2
    e(1, 762484, -184748),                // Q_3
    e(4, -974531, 236341),                // Q_4
    e(-8, -181177, 43951),                // Q_5
    e(1, 14798109, -3589099),             // Q_6
    e(1, -2416805, 586147),               // Q_7
    e(4, -3664887, 888865),               // Q_8
    e(4, -1952633, 473583),               // Q_9
];

/// Q_10, printed as `(3580-868 sqrt17) + 4(-3187+773 sqrt17) a - (-11351+2753 sqrt17) a^2`.
const Q10: [Entry; 3] = [
    e(1, 3580, -868),                     // a^0
    e(4, -3187, 773),                     // a^1
    e(-1, -11351, 2753),                  // a^2
];

/// Root equation for lambda_1 of the improved Bohr inequality, root ~ 0.567284.
const THMF_QUINTIC: [Entry; 6] = [
    e(1, -405, 0),
    e(1, 473, 0),
    e(1, 402, 0),
    e(1, 38, 0),
    e(1, 3, 0),
    e(1, 1, 0),
];

/// Root equation for lambda_2, root ~ 0.537869.
const THMF_QUARTIC: [Entry; 5] = [e(1, -513, 0), e(1, 910, 0), e(1, 80, 0), e(1, 2, 0), e(1, 1, 0)];

/// Numerator of lambda_1 = 4 N(a) / (81 (1+a)^3 (3-5a)).
const THMF_LAMBDA1_NUM: [Entry; 6] = [
    e(1, 486, 0),
    e(1, -261, 0),
    e(1, -324, 0),
    e(1, 2, 0),
    e(1, 30, 0),
    e(1, 3, 0),
];

/// Numerator of lambda_2 = N(a) / (162 (a+1)^2 (2a-1)).
const THMF_LAMBDA2_NUM: [Entry; 5] = [e(1, -81, 0), e(1, 1044, 0), e(1, 54, 0), e(1, -116, 0), e(1, -5, 0)];

/// Identifier of a built-in polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolyId {
    Psi1,
    Psi2,
    A1,
    A2,
    A3Poly,
    La,
    E1,
    E2,
    E3Poly,
    Q10,
    ThmfQuintic,
    ThmfQuartic,
    ThmfLambda1Num,
    ThmfLambda2Num,
}

impl PolyId {
    pub const ALL: [PolyId; 14] = [
        PolyId::Psi1,
        PolyId::Psi2,
        PolyId::A1,
        PolyId::A2,
        PolyId::A3Poly,
        PolyId::La,
        PolyId::E1,
        PolyId::E2,
        PolyId::E3Poly,
        PolyId::Q10,
        PolyId::ThmfQuintic,
        PolyId::ThmfQuartic,
        PolyId::ThmfLambda1Num,
        PolyId::ThmfLambda2Num,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyId::Psi1 => "psi1",
            PolyId::Psi2 => "psi2",
            PolyId::A1 => "a1",
            PolyId::A2 => "a2",
            PolyId::A3Poly => "a3_poly",
            PolyId::La => "l_a",
            PolyId::E1 => "e1",
            PolyId::E2 => "e2",
            PolyId::E3Poly => "e3_poly",
            PolyId::Q10 => "q10",
            PolyId::ThmfQuintic => "thmf_quintic",
            PolyId::ThmfQuartic => "thmf_quartic",
            PolyId::ThmfLambda1Num => "thmf_lambda1_num",
            PolyId::ThmfLambda2Num => "thmf_lambda2_num",
        }
    }

    fn entries(self) -> &'static [Entry] {
        match self {
            PolyId::Psi1 => &PSI1,
            PolyId::Psi2 => &PSI2,
            PolyId::A1 => &A1,
            PolyId::A2 => &A2,
            PolyId::A3Poly => &A3_POLY,
            PolyId::La => &L_A,
            PolyId::E1 => &E1,
            PolyId::E2 => &E2,
            PolyId::E3Poly => &E3_POLY,
            PolyId::Q10 => &Q10,
            PolyId::ThmfQuintic => &THMF_QUINTIC,
            PolyId::ThmfQuartic => &THMF_QUARTIC,
            PolyId::ThmfLambda1Num => &THMF_LAMBDA1_NUM,
            PolyId::ThmfLambda2Num => &THMF_LAMBDA2_NUM,
        }
    }

    /// Expanded integer pairs `(p, q)` per coefficient.
    pub fn integer_pairs(self) -> Vec<[i64; 2]> {
        self.entries().iter().map(|x| [x.mult * x.p, x.mult * x.q]).collect()
    }
}

impl fmt::Display for PolyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PolyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "polynomial", value: s.to_string() })
    }
}

/// The polynomial as printed.
pub fn displayed(id: PolyId) -> QuadPoly {
    QuadPoly::new(id.entries().iter().map(|x| QuadExt::scaled(x.mult, x.p, x.q)).collect())
}

#[derive(Serialize)]
struct TableJson {
    field: &'static str,
    polys: Vec<PolyJson>,
}

#[derive(Serialize)]
struct PolyJson {
    id: &'static str,
    coeffs: Vec<[i64; 2]>,
}

/// The whole table as JSON: one `[p, q]` integer pair per coefficient,
/// ascending powers, meaning `p + q sqrt 17`.
pub fn table_json() -> String {
    let table = TableJson {
        field: "Q(sqrt 17)",
        polys: PolyId::ALL
            .iter()
            .map(|id| PolyJson { id: id.name(), coeffs: id.integer_pairs() })
            .collect(),
    };
    serde_json::to_string_pretty(&table).expect("table serializes")
}

/// SHA-256 of [`table_json`], hex encoded.
pub fn table_hash() -> String {
    hex::encode(Sha256::digest(table_json().as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_round_trips_through_its_name() {
        for id in PolyId::ALL {
            assert_eq!(id.name().parse::<PolyId>().unwrap(), id);
        }
        assert!("psi3".parse::<PolyId>().is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(displayed(PolyId::Psi1).degree(), 12);
        assert_eq!(displayed(PolyId::Psi2).degree(), 12);
        assert_eq!(displayed(PolyId::A1).degree(), 8);
        assert_eq!(displayed(PolyId::A3Poly).degree(), 9);
        assert_eq!(displayed(PolyId::E3Poly).degree(), 9);
        assert_eq!(displayed(PolyId::ThmfQuintic).degree(), 5);
    }

    #[test]
    fn psi1_constant_term() {
        let c0 = displayed(PolyId::Psi1).coeff(0);
        assert_eq!(c0, QuadExt::from_ints(2048 * -169479, 2048 * 41105));
        assert_eq!(c0.sign(), 1);
    }

    #[test]
    fn l_a_and_q10_coincide() {
        assert_eq!(displayed(PolyId::La), displayed(PolyId::Q10));
    }

    #[test]
    fn json_has_integer_pairs() {
        let v: serde_json::Value = serde_json::from_str(&table_json()).unwrap();
        assert_eq!(v["polys"][0]["id"], "psi1");
        assert_eq!(v["polys"][0]["coeffs"][0][0], 2048 * -169479i64);
        assert_eq!(v["polys"].as_array().unwrap().len(), PolyId::ALL.len());
        assert_eq!(table_hash().len(), 64);
    }
}
