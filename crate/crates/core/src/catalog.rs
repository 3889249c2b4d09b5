//! Named matroids used throughout the tests, examples and shipped corpus.

use num_rational::BigRational;

use crate::error::Result;
use crate::field::FieldSpec;
use crate::matroid::Matroid;

/// The Fano plane `PG(2,2)` over GF(2).
///
/// Columns are labelled so that the seven lines are
/// `015, 024, 036, 123, 146, 256, 345`; under the order `0 < .. < 6` the
/// nbc-sets of size two avoiding `0` are `12, 13, 14, 16, 25, 26, 34, 35`.
pub fn fano() -> Matroid {
    Matroid::from_integer_matrix(FieldSpec::Prime(2), &fano_matrix()).expect("Fano matrix is valid")
}

pub fn fano_matrix() -> Vec<Vec<i64>> {
    vec![
        vec![1, 0, 0, 0, 1, 1, 1],
        vec![0, 1, 0, 1, 0, 1, 1],
        vec![0, 0, 1, 1, 1, 0, 1],
    ]
}

/// The seven lines of [`fano`].
pub const FANO_LINES: [[usize; 3]; 7] = [
    [0, 1, 5],
    [0, 2, 4],
    [0, 3, 6],
    [1, 2, 3],
    [1, 4, 6],
    [2, 5, 6],
    [3, 4, 5],
];

/// Edges of the complete graph `K_4`.
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Cycle matroid `M(K_4)`.
pub fn k4() -> Matroid {
    Matroid::graphic(&K4_EDGES).expect("K4 is a valid graph")
}

/// The `F_q`-points of the projective line, as the column matroid of
/// `[[1, 1, .., 1, 0], [0, 1, .., q-1, 1]]` over GF(q) for prime `q`.
pub fn projective_line(q: u64) -> Result<Matroid> {
    let q = q as usize;
    let mut top = vec![1i64; q];
    top.push(0);
    let mut bottom: Vec<i64> = (0..q as i64).collect();
    bottom.push(1);
    Matroid::from_integer_matrix(FieldSpec::Prime(q as u64), &[top, bottom])
}

fn rational_rows(rows: &[&[(i64, i64)]]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect())
        .collect()
}

/// A rational 3x6 matrix all of whose 3x3 minors are nonzero.
pub fn generic_rational_3x6() -> Matroid {
    Matroid::from_matrix(FieldSpec::Rationals, generic_rows(6)).expect("valid matrix")
}

/// The first five columns of [`generic_rational_3x6`].
pub fn generic_rational_3x5() -> Matroid {
    Matroid::from_matrix(FieldSpec::Rationals, generic_rows(5)).expect("valid matrix")
}

fn generic_rows(cols: usize) -> Vec<Vec<BigRational>> {
    let rows = rational_rows(&[
        &[(1, 1), (0, 1), (0, 1), (1, 1), (1, 1), (1, 2)],
        &[(0, 1), (1, 1), (0, 1), (1, 1), (2, 1), (3, 1)],
        &[(0, 1), (0, 1), (1, 1), (1, 1), (-1, 1), (5, 1)],
    ]);
    rows.into_iter().map(|r| r.into_iter().take(cols).collect()).collect()
}

/// A generic hyperplane in `k^{n+1}`: the column matroid of a single
/// relation `x_0 + .. + x_n = 0`, i.e. `U_{n,n+1}`.
pub fn generic_hyperplane(size: usize) -> Matroid {
    // Kernel of the all-ones row.
    let rows: Vec<Vec<i64>> = (0..size - 1)
        .map(|i| {
            let mut r = vec![0i64; size];
            r[i] = 1;
            r[size - 1] = -1;
            r
        })
        .collect();
    Matroid::from_integer_matrix(FieldSpec::Rationals, &rows).expect("valid matrix")
}
