//! Sparse homogeneous elements of the exterior algebra on `{e_0, .., e_n}`.

use std::collections::BTreeMap;

use crate::error::{Result, WorkbenchError};
use crate::field::Field;
use crate::subset::ElementSet;

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}`, or `None` when `a` and `b`
/// overlap and the product vanishes.
pub fn wedge_sign(a: ElementSet, b: ElementSet) -> Option<i64> {
    if !a.is_disjoint(b) {
        return None;
    }
    // transpositions needed to sort: pairs (i in a, j in b) with i > j
    let inversions: u32 = b.iter().map(|j| (a.bits() >> j >> 1).count_ones()).sum();
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// `sum c_S e_S` over `k`-subsets `S`, with no zero coefficients stored.
#[derive(Clone, Debug)]
pub struct ExteriorElement<F: Field> {
    field: F,
    degree: usize,
    terms: BTreeMap<ElementSet, F::Elem>,
}

impl<F: Field> PartialEq for ExteriorElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.terms == other.terms
    }
}

impl<F: Field> ExteriorElement<F> {
    pub fn zero(field: F, degree: usize) -> Self {
        ExteriorElement {
            field,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `e_S`.
    pub fn monomial(field: F, set: ElementSet) -> Self {
        let one = field.one();
        let mut x = Self::zero(field, set.len());
        x.terms.insert(set, one);
        x
    }

    /// The degree-zero unit `e_∅`.
    pub fn unit(field: F) -> Self {
        Self::monomial(field, ElementSet::EMPTY)
    }

    /// `e_i`.
    pub fn generator(field: F, i: usize) -> Self {
        Self::monomial(field, ElementSet::singleton(i))
    }

    /// `e_i - e_j`.
    pub fn difference(field: F, i: usize, j: usize) -> Self {
        let minus_one = field.neg(&field.one());
        let mut x = Self::generator(field, i);
        x.add_term(ElementSet::singleton(j), minus_one);
        x
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, set: ElementSet) -> F::Elem {
        self.terms.get(&set).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Terms in lexicographic order of their index sets.
    pub fn terms(&self) -> impl Iterator<Item = (ElementSet, &F::Elem)> {
        self.terms.iter().map(|(s, c)| (*s, c))
    }

    pub fn add_term(&mut self, set: ElementSet, c: F::Elem) {
        assert_eq!(set.len(), self.degree, "term of the wrong degree");
        let f = &self.field;
        if f.is_zero(&c) {
            return;
        }
        let v = match self.terms.remove(&set) {
            Some(old) => f.add(&old, &c),
            None => c,
        };
        if !f.is_zero(&v) {
            self.terms.insert(set, v);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(WorkbenchError::invalid("adding elements of different degrees"));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.degree);
        for (s, v) in self.terms() {
            out.add_term(s, self.field.mul(v, c));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.degree + other.degree);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if let Some(sign) = wedge_sign(a, b) {
                    out.add_term(a.union(b), f.mul(&f.mul(x, y), &f.from_i64(sign)));
                }
            }
        }
        out
    }

    /// Linear extension of [`koszul_boundary`].
    pub fn boundary(&self) -> Result<Self> {
        if self.degree == 0 {
            return Err(WorkbenchError::invalid("boundary of a degree-zero element"));
        }
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.degree - 1);
        for (s, c) in self.terms() {
            for (t, d) in koszul_boundary(f.clone(), s)?.terms() {
                out.add_term(t, f.mul(c, d));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "terms": self
                .terms()
                .map(|(s, c)| serde_json::json!({"set": s.to_vec(), "c": self.field.to_decimal(c)}))
                .collect::<Vec<_>>(),
        })
    }
}

/// `∂e_S = sum_{i=0}^{k-1} (-1)^i e_{S \ s_{k-i}}` for `S = {s_1 < .. < s_k}`:
/// the largest element is dropped with sign `+1`, the next with `-1`, and so
/// on.
pub fn koszul_boundary<F: Field>(field: F, s: ElementSet) -> Result<ExteriorElement<F>> {
    if s.is_empty() {
        return Err(WorkbenchError::invalid("boundary of the empty monomial"));
    }
    let elems = s.to_vec();
    let k = elems.len();
    let mut out = ExteriorElement::zero(field.clone(), k - 1);
    for i in 0..k {
        let dropped = elems[k - 1 - i];
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_term(s.remove(dropped), field.from_i64(sign));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn boundary_of_pair() {
        let d = koszul_boundary(Rationals, set(&[0, 1])).unwrap();
        let mut expected = ExteriorElement::generator(Rationals, 0);
        expected.add_term(set(&[1]), Rationals.from_i64(-1));
        assert_eq!(d, expected);
    }

    #[test]
    fn boundary_of_singleton_is_unit() {
        let d = koszul_boundary(Rationals, set(&[4])).unwrap();
        assert_eq!(d, ExteriorElement::unit(Rationals));
    }

    #[test]
    fn boundary_of_triple() {
        let d = koszul_boundary(Rationals, set(&[0, 1, 2])).unwrap();
        let terms: Vec<(Vec<usize>, String)> = d.terms().map(|(s, c)| (s.to_vec(), c.to_string())).collect();
        assert_eq!(
            terms,
            vec![
                (vec![0, 1], "1".to_string()),
                (vec![0, 2], "-1".to_string()),
                (vec![1, 2], "1".to_string())
            ]
        );
    }

    #[test]
    fn empty_boundary_rejected() {
        assert!(matches!(
            koszul_boundary(Rationals, ElementSet::EMPTY),
            Err(WorkbenchError::InvalidInput(_))
        ));
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(set(&[1]), set(&[0])), Some(-1));
        assert_eq!(wedge_sign(set(&[0, 2]), set(&[1])), Some(-1));
        assert_eq!(wedge_sign(set(&[0, 1]), set(&[2, 3])), Some(1));
        assert_eq!(wedge_sign(set(&[2, 3]), set(&[0, 1])), Some(1));
        assert_eq!(wedge_sign(set(&[0]), set(&[0, 1])), None);
    }

    #[test]
    fn odd_square_vanishes() {
        let x = ExteriorElement::difference(Rationals, 1, 0);
        assert!(x.wedge(&x).is_zero());
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(bits in 1u64..(1 << 8), p in prop_oneof![Just(2u64), Just(3), Just(5)]) {
            let s = ElementSet::from_bits(bits);
            prop_assume!(s.len() >= 2);
            let q = koszul_boundary(Rationals, s).unwrap().boundary().unwrap();
            prop_assert!(q.is_zero());
            let f = PrimeField::new(p).unwrap();
            prop_assert!(koszul_boundary(f, s).unwrap().boundary().unwrap().is_zero());
        }

        #[test]
        fn graded_commutativity(a in 1u64..(1 << 7), b in 1u64..(1 << 7)) {
            let (a, b) = (ElementSet::from_bits(a), ElementSet::from_bits(b));
            let x = ExteriorElement::monomial(Rationals, a);
            let y = ExteriorElement::monomial(Rationals, b);
            let sign = if a.len() * b.len() % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(x.wedge(&y), y.wedge(&x).scale(&Rationals.from_i64(sign)));
        }
    }
}
