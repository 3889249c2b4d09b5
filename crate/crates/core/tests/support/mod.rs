#![allow(dead_code)]

use matroid_workbench::poly::{BivariatePolynomial, UnivariatePolynomial};
use matroid_workbench::{FieldSpec, Matroid};
use num_bigint::BigInt;
use proptest::prelude::*;

pub const FIELDS: [FieldSpec; 4] = [
    FieldSpec::Rationals,
    FieldSpec::Prime(2),
    FieldSpec::Prime(3),
    FieldSpec::Prime(5),
];

/// Column matroids of small integer matrices over Q, GF(2), GF(3), GF(5).
pub fn arb_matroid(max_size: usize) -> impl Strategy<Value = Matroid> {
    (0..FIELDS.len(), 1usize..=3, 1usize..=max_size)
        .prop_flat_map(|(f, rows, cols)| {
            (
                Just(f),
                proptest::collection::vec(proptest::collection::vec(-2i64..=2, cols), rows),
            )
        })
        .prop_map(|(f, matrix)| Matroid::from_integer_matrix(FIELDS[f], &matrix).expect("valid matrix"))
}

pub fn arb_loopless_matroid(max_size: usize) -> impl Strategy<Value = Matroid> {
    arb_matroid(max_size).prop_filter("loopless", Matroid::is_loopless)
}

/// `u^{#E - r} v^r h(1/v, 1/u)`, the `h`-polynomial expected for the dual.
pub fn cremona(h: &BivariatePolynomial, size: usize, rank: usize) -> BivariatePolynomial {
    let corank = (size - rank) as u32;
    let mut out = BivariatePolynomial::zero();
    for (p, q, c) in h.terms() {
        out.add_term(corank - q, rank as u32 - p, c.clone());
    }
    out
}

/// `(u + 1)^k`.
pub fn one_plus_u_pow(k: usize) -> UnivariatePolynomial {
    let base = UnivariatePolynomial::from_coeffs(vec![BigInt::from(1), BigInt::from(1)]);
    (0..k).fold(UnivariatePolynomial::from_coeffs(vec![BigInt::from(1)]), |acc, _| {
        &acc * &base
    })
}
