use num_rational::BigRational;
use num_traits::Zero;

use super::quad::QuadExt;

/// Dense univariate polynomial over Q(sqrt 17), ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QuadPoly {
    coeffs: Vec<QuadExt>,
}

impl QuadPoly {
    /// Trailing zero coefficients are dropped so the leading one is nonzero.
    pub fn new(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(QuadExt::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Polynomial with integer coefficients (`q = 0`).
    pub fn from_integers(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| QuadExt::from_ints(c, 0)).collect())
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `i`-th coefficient, zero past the degree.
    pub fn coeff(&self, i: usize) -> QuadExt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, t: &BigRational) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    /// Floating evaluation via the exact value.
    pub fn eval_f64(&self, t: &BigRational) -> f64 {
        self.eval(t).to_f64()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![QuadExt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &QuadExt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn scale_rational(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::default();
        }
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }
}
