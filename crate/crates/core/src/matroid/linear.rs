//! Matroids realised as the column matroid of an exact matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Result, WorkbenchError};
use crate::field::{bareiss_rank, kernel_basis, rank_of, Field, FieldSpec, PrimeField, Rationals};
use crate::subset::ElementSet;

/// A matrix over a concrete field, columns indexed by the ground set.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    field: F,
    rows: Vec<Vec<F::Elem>>,
    ncols: usize,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(WorkbenchError::invalid("matrix rows have unequal lengths"));
        }
        Ok(Matrix { field, rows, ncols })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        self.rows.iter().map(|r| r[c].clone()).collect()
    }

    fn column_rank(&self, cols: ElementSet) -> usize {
        rank_of(&self.field, self.nrows(), cols.iter().map(|c| self.column(c)))
    }

    /// Column deletion followed by the quotient by the span of the contracted
    /// columns: rows of the result are `y A` for `y` ranging over a basis of
    /// the left annihilator of the contracted columns.
    fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> Matrix<F> {
        let f = &self.field;
        let contracted_cols: Vec<Vec<F::Elem>> = contracted.iter().map(|c| self.column(c)).collect();
        let annihilator = kernel_basis(f, &contracted_cols, self.nrows());
        let keep: Vec<usize> = (0..self.ncols)
            .filter(|&c| !deleted.contains(c) && !contracted.contains(c))
            .collect();
        let rows = annihilator
            .iter()
            .map(|y| {
                keep.iter()
                    .map(|&c| {
                        y.iter()
                            .zip(&self.rows)
                            .fold(f.zero(), |acc, (yi, row)| f.add(&acc, &f.mul(yi, &row[c])))
                    })
                    .collect()
            })
            .collect();
        Matrix {
            field: f.clone(),
            rows,
            ncols: keep.len(),
        }
    }

    /// Rows spanning the orthogonal complement of the row space.
    fn orthogonal_complement(&self) -> Matrix<F> {
        Matrix {
            field: self.field.clone(),
            rows: kernel_basis(&self.field, &self.rows, self.ncols),
            ncols: self.ncols,
        }
    }
}

/// The realisation backing a linear matroid.
#[derive(Clone, Debug)]
pub enum LinearRep {
    Rational {
        matrix: Matrix<Rationals>,
        /// Columns rescaled to integers for fraction-free rank computation.
        integer_columns: Vec<Vec<BigInt>>,
    },
    Prime(Matrix<PrimeField>),
}

fn integer_columns(m: &Matrix<Rationals>) -> Vec<Vec<BigInt>> {
    (0..m.ncols())
        .map(|c| {
            let col = m.column(c);
            let lcm = col.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            col.iter()
                .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect()
}

impl LinearRep {
    pub fn rational(matrix: Matrix<Rationals>) -> Self {
        let integer_columns = integer_columns(&matrix);
        LinearRep::Rational {
            matrix,
            integer_columns,
        }
    }

    /// Builds a representation from rational entries, reducing them into
    /// `GF(p)` when a prime field is requested.
    pub fn from_entries(field: FieldSpec, rows: Vec<Vec<BigRational>>, ncols: usize) -> Result<Self> {
        match field {
            FieldSpec::Rationals => Ok(LinearRep::rational(Matrix::new(Rationals, rows, ncols)?)),
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p)?;
                let mut out = Vec::with_capacity(rows.len());
                for row in rows {
                    let mut r = Vec::with_capacity(row.len());
                    for x in row {
                        let den = f.reduce(x.denom());
                        if den == 0 {
                            return Err(WorkbenchError::invalid(format!(
                                "entry {x} has a denominator divisible by {p}"
                            )));
                        }
                        r.push(f.mul(&f.reduce(x.numer()), &f.inv(&den)));
                    }
                    out.push(r);
                }
                Ok(LinearRep::Prime(Matrix::new(f, out, ncols)?))
            }
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            LinearRep::Rational { .. } => FieldSpec::Rationals,
            LinearRep::Prime(m) => FieldSpec::Prime(m.field().modulus()),
        }
    }

    pub fn ncols(&self) -> usize {
        match self {
            LinearRep::Rational { matrix, .. } => matrix.ncols(),
            LinearRep::Prime(m) => m.ncols(),
        }
    }

    pub fn nrows(&self) -> usize {
        match self {
            LinearRep::Rational { matrix, .. } => matrix.nrows(),
            LinearRep::Prime(m) => m.nrows(),
        }
    }

    pub fn rank(&self, cols: ElementSet) -> usize {
        match self {
            LinearRep::Rational { integer_columns, .. } => {
                if cols.is_empty() {
                    return 0;
                }
                // rank of the transpose: selected columns as rows
                bareiss_rank(cols.iter().map(|c| integer_columns[c].clone()).collect())
            }
            LinearRep::Prime(m) => m.column_rank(cols),
        }
    }

    pub fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> LinearRep {
        match self {
            LinearRep::Rational { matrix, .. } => LinearRep::rational(matrix.minor(deleted, contracted)),
            LinearRep::Prime(m) => LinearRep::Prime(m.minor(deleted, contracted)),
        }
    }

    /// A realisation of the dual matroid by the orthogonal complement.
    pub fn dual(&self) -> LinearRep {
        match self {
            LinearRep::Rational { matrix, .. } => LinearRep::rational(matrix.orthogonal_complement()),
            LinearRep::Prime(m) => LinearRep::Prime(m.orthogonal_complement()),
        }
    }

    /// Entries rendered as decimal strings, row by row.
    pub fn entries(&self) -> Vec<Vec<String>> {
        fn render<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
            m.rows()
                .iter()
                .map(|r| r.iter().map(|x| m.field().to_decimal(x)).collect())
                .collect()
        }
        match self {
            LinearRep::Rational { matrix, .. } => render(matrix),
            LinearRep::Prime(m) => render(m),
        }
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.ncols()).any(|c| self.rank(ElementSet::singleton(c)) == 0)
    }
}
