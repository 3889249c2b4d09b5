//! Exact integer polynomials in one and two variables.
//!
//! Both serialize to `{"terms":[...]}` with coefficients as decimal strings.
//! Terms are listed in decreasing degree order: `(x, y)` pairs descend
//! lexicographically, so `x^2 + x + y` is written `(2,0), (1,0), (0,1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, WorkbenchError};

/// `sum c_{ij} x^i y^j` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (i, j, v) in self.terms() {
            out.add_term(i, j, v * c);
        }
        out
    }

    /// Multiply by `x^i y^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(y, x)`.
    pub fn swap_variables(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms().map(|(i, j, c)| c * Pow::pow(x, i) * Pow::pow(y, j)).sum()
    }

    /// `p(x, 0)` as a univariate polynomial.
    pub fn at_y_zero(&self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (i, j, c) in self.terms() {
            if j == 0 {
                out.add_term(i, c.clone());
            }
        }
        out
    }

    /// `p(0, y)` as a univariate polynomial in `y`.
    pub fn at_x_zero(&self) -> UnivariatePolynomial {
        self.swap_variables().at_y_zero()
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomials always serialize")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| WorkbenchError::invalid(format!("bad polynomial: {e}")))
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (a, b, c) in self.terms() {
            for (d, e, f) in rhs.terms() {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiTerm {
    x: u32,
    y: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiTerms {
    terms: Vec<BiTerm>,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiTerms {
            terms: self
                .terms()
                .rev()
                .map(|(x, y, c)| BiTerm { x, y, c: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BiTerms::deserialize(d)?;
        let mut p = BivariatePolynomial::zero();
        for t in raw.terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(t.x, t.y, c);
        }
        Ok(p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, vars: &[(&str, u32)]) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    let vars: Vec<_> = vars.iter().filter(|(_, e)| *e > 0).collect();
    if !mag.is_one() || vars.is_empty() {
        write!(f, "{mag}")?;
    }
    for (name, e) in vars {
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, j, c)) in self.terms().rev().enumerate() {
            write_monomial(f, k == 0, c, &[("x", i), ("y", j)])?;
        }
        Ok(())
    }
}

/// `sum c_k x^k` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// From coefficients listed by increasing degree.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, c.into());
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    /// Dense coefficient list `c_0, .., c_deg`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.terms().map(|(k, c)| c * Pow::pow(x, k)).sum()
    }

    /// Quotient and remainder of division by `x - a`.
    pub fn div_linear(&self, a: &BigInt) -> (UnivariatePolynomial, BigInt) {
        let coeffs = self.coeffs();
        if coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        // synthetic division from the top
        let mut quotient = vec![BigInt::zero(); coeffs.len() - 1];
        let mut carry = BigInt::zero();
        for k in (0..coeffs.len()).rev() {
            let v = &coeffs[k] + &carry * a;
            if k == 0 {
                return (Self::from_coeffs(quotient), v);
            }
            quotient[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self.terms().rev().map(|(k, c)| serde_json::json!({"x": k, "c": c.to_string()})).collect::<Vec<_>>()
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Term {
            x: u32,
            c: String,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Terms {
            terms: Vec<Term>,
        }
        let raw: Terms =
            serde_json::from_value(v.clone()).map_err(|e| WorkbenchError::invalid(format!("bad polynomial: {e}")))?;
        let mut p = Self::zero();
        for t in raw.terms {
            let c: BigInt =
                t.c.parse()
                    .map_err(|_| WorkbenchError::invalid(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(t.x, c);
        }
        Ok(p)
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn add(self, rhs: Self) -> UnivariatePolynomial {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: Self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms().rev().enumerate() {
            write_monomial(f, n == 0, c, &[("u", k)])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn json_order_and_format() {
        let p = &(&BivariatePolynomial::x().pow(2) + &BivariatePolynomial::x()) + &BivariatePolynomial::y();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"terms":[{"x":2,"y":0,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]}"#
        );
        assert_eq!(p.to_string(), "x^2 + x + y");
    }

    #[test]
    fn synthetic_division() {
        // u^2 - 3u + 2 = (u - 1)(u - 2)
        let p = UnivariatePolynomial::from_coeffs([2, -3, 1]);
        let (q, r) = p.div_linear(&BigInt::one());
        assert_eq!(q, UnivariatePolynomial::from_coeffs([-2, 1]));
        assert!(r.is_zero());
        let (_, r) = UnivariatePolynomial::from_coeffs([1, 0, 1]).div_linear(&BigInt::one());
        assert_eq!(r, BigInt::from(2));
        assert_eq!(p.to_string(), "u^2 - 3u + 2");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = BivariatePolynomial::monomial(3, 1, 1);
        p.add_term(1, 1, BigInt::from(-3));
        assert!(p.is_zero());
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"terms":[]}"#);
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePolynomial> {
        proptest::collection::vec((0u32..5, 0u32..5, -1000i64..1000), 0..12).prop_map(|ts| {
            let mut p = BivariatePolynomial::zero();
            for (i, j, c) in ts {
                p.add_term(i, j, BigInt::from(c) * BigInt::from(10).pow(30u32));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(p in arb_poly()) {
            let text = serde_json::to_string(&p).unwrap();
            let back: BivariatePolynomial = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        }

        #[test]
        fn univariate_round_trip(cs in proptest::collection::vec(-50i64..50, 0..8)) {
            let p = UnivariatePolynomial::from_coeffs(cs);
            prop_assert_eq!(UnivariatePolynomial::from_json(&p.to_json()).unwrap(), p);
        }

        #[test]
        fn product_evaluates_pointwise(p in arb_poly(), q in arb_poly(), x in -4i64..4, y in -4i64..4) {
            let (x, y) = (BigInt::from(x), BigInt::from(y));
            prop_assert_eq!((&p * &q).eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
        }
    }
}
