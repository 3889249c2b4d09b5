//! Power series in one parameter `ε`, truncated at a fixed order, with exact
//! rational coefficients.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `sum_{k < order} c_k ε^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

/// Generalised binomial coefficient `C(m, k)` for any integer `m`.
pub fn binomial_any(m: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(m) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = BigRational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// `(1 + ε)^m`.
    pub fn binomial(m: i64, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..order)
                .map(|k| BigRational::from_integer(binomial_any(m, k)))
                .collect(),
        }
    }

    /// `(1 - (1 + ε)^{-c}) / ε`, whose constant term is `c`.
    pub fn localization_factor(c: i64, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..order)
                .map(|k| BigRational::from_integer(-binomial_any(-c, k + 1)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Option<Self> {
        let a0 = self.coeffs.first()?;
        if a0.is_zero() {
            return None;
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b = vec![BigRational::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &b[k - j];
            }
            b[k] = -acc * &inv0;
        }
        Some(TruncatedSeries { coeffs: b })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order());
        let n = self.order();
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }
}
