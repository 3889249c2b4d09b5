//! Orlik–Solomon algebras of loopless matroids over exact fields.
//!
//! `OS^k` is `∧^k` modulo the degree-`k` part of the ideal generated by the
//! boundaries `∂e_S` of dependent sets `S`. Each graded piece is built by
//! dense row reduction of the relation span, with columns ordered so that
//! the non-nbc monomials come first; the nbc monomials are then exactly the
//! pivot-free columns and give the quotient basis used for normal forms.

mod exterior;

use std::collections::HashMap;
use std::sync::OnceLock;

use num_integer::binomial;

pub use exterior::{koszul_boundary, wedge_sign, ExteriorElement};

use crate::error::{Result, WorkbenchError};
use crate::field::{Echelon, Field, FieldSpec, PrimeField, Rationals};
use crate::matroid::Matroid;
use crate::subset::ElementSet;

/// Largest ambient dimension `C(#E, k)` handled by dense elimination.
pub const AMBIENT_LIMIT: u64 = 1 << 20;

/// Which dependent sets contribute generators `∂e_S ∧ e_T`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RelationGenerators {
    /// Every dependent set.
    #[default]
    AllDependent,
    /// Circuits only; spans the same ideal.
    CircuitsOnly,
}

fn require_loopless(m: &Matroid) -> Result<()> {
    if m.is_loopless() {
        Ok(())
    } else {
        Err(WorkbenchError::LooplessRequired(m.loops().to_vec()))
    }
}

/// Circuits with their minimum removed, sorted and deduplicated.
pub fn broken_circuits(m: &Matroid) -> Result<Vec<ElementSet>> {
    let mut out: Vec<ElementSet> = m
        .circuits()?
        .iter()
        .map(|c| c.remove(c.min_element().expect("circuits are nonempty")))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Independent `k`-subsets containing no broken circuit, in lexicographic
/// order.
pub fn nbc_sets(m: &Matroid, k: usize) -> Result<Vec<ElementSet>> {
    require_loopless(m)?;
    let broken = broken_circuits(m)?;
    Ok(ElementSet::k_subsets(m.size(), k)
        .filter(|s| m.is_independent(*s) && !broken.iter().any(|b| b.is_subset(*s)))
        .collect())
}

/// The index sets `S ⊆ {1, .., n}` with `#S = k` and `S ∪ {0}` an nbc-set.
pub fn reduced_nbc_index_sets(m: &Matroid, k: usize) -> Result<Vec<ElementSet>> {
    Ok(nbc_sets(m, k + 1)?
        .into_iter()
        .filter(|s| s.contains(0))
        .map(|s| s.remove(0))
        .collect())
}

/// One graded piece `OS^k`.
#[derive(Clone, Debug)]
pub struct OsSpace<F: Field> {
    field: F,
    degree: usize,
    /// Ambient monomials: non-nbc sets, then nbc sets, each block in
    /// lexicographic order.
    columns: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    nbc_offset: usize,
    relations: Echelon<F>,
}

impl<F: Field> OsSpace<F> {
    pub fn new(m: &Matroid, k: usize, field: F, generators: RelationGenerators) -> Result<Self> {
        require_loopless(m)?;
        if k > m.size() {
            return Err(WorkbenchError::invalid(format!("degree {k} exceeds #E = {}", m.size())));
        }
        let ambient = binomial(m.size() as u64, k as u64);
        if ambient > AMBIENT_LIMIT {
            return Err(WorkbenchError::too_large("ambient dimension", ambient, AMBIENT_LIMIT));
        }
        let nbc = nbc_sets(m, k)?;
        let mut columns: Vec<ElementSet> = ElementSet::k_subsets(m.size(), k)
            .filter(|s| nbc.binary_search(s).is_err())
            .collect();
        let nbc_offset = columns.len();
        columns.extend(nbc.iter().copied());
        let index: HashMap<ElementSet, usize> = columns.iter().enumerate().map(|(i, s)| (*s, i)).collect();

        let mut space = OsSpace {
            field: field.clone(),
            degree: k,
            columns,
            index,
            nbc_offset,
            relations: Echelon::new(field.clone(), ambient as usize),
        };

        let sources: Vec<ElementSet> = match generators {
            RelationGenerators::AllDependent => (2..=(k + 1).min(m.size()))
                .flat_map(|s| ElementSet::k_subsets(m.size(), s))
                .filter(|s| !m.is_independent(*s))
                .collect(),
            RelationGenerators::CircuitsOnly => m.circuits()?.iter().copied().filter(|c| c.len() <= k + 1).collect(),
        };
        for s in sources {
            let boundary = koszul_boundary(field.clone(), s)?;
            for t in ElementSet::k_subsets(m.size(), k + 1 - s.len()) {
                // more than one shared element kills every term
                if s.intersection(t).len() > 1 {
                    continue;
                }
                let rel = boundary.wedge(&ExteriorElement::monomial(field.clone(), t));
                if !rel.is_zero() {
                    let dense = space.dense(&rel);
                    space.relations.insert(dense);
                }
            }
        }
        space.check_nbc_complement()?;
        Ok(space)
    }

    fn check_nbc_complement(&self) -> Result<()> {
        let rank = self.relations.rank();
        if rank != self.nbc_offset || self.relations.pivots().iter().any(|&p| p >= self.nbc_offset) {
            return Err(WorkbenchError::invariant(format!(
                "degree {}: relation rank {rank} with {} non-nbc monomials; nbc monomials are not a complement",
                self.degree, self.nbc_offset
            )));
        }
        Ok(())
    }

    fn dense(&self, x: &ExteriorElement<F>) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.columns.len()];
        for (s, c) in x.terms() {
            v[self.index[&s]] = c.clone();
        }
        v
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn ambient_dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    /// `C(#E, k) - rank(relations)`.
    pub fn dimension(&self) -> usize {
        self.ambient_dimension() - self.relation_rank()
    }

    /// The nbc monomials forming the chosen basis, in lexicographic order.
    pub fn basis(&self) -> &[ElementSet] {
        &self.columns[self.nbc_offset..]
    }

    /// Coordinates of `x` against [`basis`](Self::basis) modulo relations.
    pub fn normal_form(&self, x: &ExteriorElement<F>) -> Result<Vec<F::Elem>> {
        if x.degree() != self.degree {
            return Err(WorkbenchError::invalid(format!(
                "element of degree {} reduced in degree {}",
                x.degree(),
                self.degree
            )));
        }
        let mut v = self.dense(x);
        self.relations.reduce(&mut v);
        Ok(v.split_off(self.nbc_offset))
    }

    /// `sum c_i e_{B_i}` for coordinates against the nbc basis.
    pub fn element(&self, coords: &[F::Elem]) -> ExteriorElement<F> {
        let mut out = ExteriorElement::zero(self.field.clone(), self.degree);
        for (s, c) in self.basis().iter().zip(coords) {
            out.add_term(*s, c.clone());
        }
        out
    }
}

/// All graded pieces of `OS(M)`, built on demand.
#[derive(Debug)]
pub struct OsAlgebra<F: Field> {
    matroid: Matroid,
    field: F,
    generators: RelationGenerators,
    spaces: Vec<OnceLock<OsSpace<F>>>,
}

impl<F: Field> OsAlgebra<F> {
    pub fn new(m: &Matroid, field: F) -> Result<Self> {
        Self::with_generators(m, field, RelationGenerators::default())
    }

    pub fn with_generators(m: &Matroid, field: F, generators: RelationGenerators) -> Result<Self> {
        require_loopless(m)?;
        Ok(OsAlgebra {
            matroid: m.clone(),
            field,
            generators,
            spaces: (0..=m.size()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn space(&self, k: usize) -> Result<&OsSpace<F>> {
        let slot = self
            .spaces
            .get(k)
            .ok_or_else(|| WorkbenchError::invalid(format!("degree {k} exceeds #E")))?;
        if let Some(s) = slot.get() {
            return Ok(s);
        }
        let built = OsSpace::new(&self.matroid, k, self.field.clone(), self.generators)?;
        Ok(slot.get_or_init(|| built))
    }

    /// `dim OS^k` for `k = 0, .., r`.
    pub fn dimensions(&self) -> Result<Vec<usize>> {
        (0..=self.matroid.rank())
            .map(|k| Ok(self.space(k)?.dimension()))
            .collect()
    }

    pub fn normal_form(&self, x: &ExteriorElement<F>) -> Result<Vec<F::Elem>> {
        self.space(x.degree())?.normal_form(x)
    }

    /// Reduces `x` to a combination of nbc monomials.
    pub fn reduce(&self, x: &ExteriorElement<F>) -> Result<ExteriorElement<F>> {
        let space = self.space(x.degree())?;
        Ok(space.element(&space.normal_form(x)?))
    }

    /// Normal form of `a ∧ b`.
    pub fn multiply(&self, a: &ExteriorElement<F>, b: &ExteriorElement<F>) -> Result<ExteriorElement<F>> {
        let product = a.wedge(b);
        if product.degree() > self.matroid.size() {
            return Ok(product);
        }
        self.reduce(&product)
    }

    /// `(e_{s_1} - e_0) ∧ .. ∧ (e_{s_k} - e_0)`, expanded in `∧^k`.
    pub fn reduced_monomial(&self, s: ElementSet) -> ExteriorElement<F> {
        s.iter().fold(ExteriorElement::unit(self.field.clone()), |acc, e| {
            acc.wedge(&ExteriorElement::difference(self.field.clone(), e, 0))
        })
    }

    /// The reduced-nbc monomials of degree `k`.
    pub fn reduced_nbc_basis(&self, k: usize) -> Result<Vec<ExteriorElement<F>>> {
        Ok(reduced_nbc_index_sets(&self.matroid, k)?
            .into_iter()
            .map(|s| self.reduced_monomial(s))
            .collect())
    }

    /// Rank of the normal forms of `elems`, all of degree `k`.
    pub fn span_rank(&self, k: usize, elems: &[ExteriorElement<F>]) -> Result<usize> {
        let space = self.space(k)?;
        let mut ech = Echelon::new(self.field.clone(), space.dimension());
        for x in elems {
            ech.insert(space.normal_form(x)?);
        }
        Ok(ech.rank())
    }

    /// The degree-`k` piece of the reduced algebra, generated by the
    /// differences `e_i - e_0`, with its reduced-nbc basis checked by linear
    /// algebra.
    pub fn reduced_space(&self, k: usize) -> Result<ReducedOsSpace<F>> {
        let index_sets = reduced_nbc_index_sets(&self.matroid, k)?;
        let basis: Vec<_> = index_sets.iter().map(|s| self.reduced_monomial(*s)).collect();
        if k + 1 > self.matroid.size() {
            return Ok(ReducedOsSpace {
                degree: k,
                index_sets,
                basis,
                dimension: 0,
            });
        }
        let independent = self.span_rank(k, &basis)?;
        if independent != basis.len() {
            return Err(WorkbenchError::invariant(format!(
                "reduced-nbc monomials of degree {k} have rank {independent}, expected {}",
                basis.len()
            )));
        }
        let all_products: Vec<_> = ElementSet::k_subsets(self.matroid.size(), k)
            .filter(|s| !s.contains(0))
            .map(|s| self.reduced_monomial(s))
            .collect();
        let dimension = self.span_rank(k, &all_products)?;
        if dimension != basis.len() {
            return Err(WorkbenchError::invariant(format!(
                "reduced OS^{k} has dimension {dimension} but {} reduced-nbc monomials",
                basis.len()
            )));
        }
        Ok(ReducedOsSpace {
            degree: k,
            index_sets,
            basis,
            dimension,
        })
    }

    /// `dim` of the reduced algebra in degrees `0, .., r - 1`.
    pub fn reduced_dimensions(&self) -> Result<Vec<usize>> {
        (0..self.matroid.rank())
            .map(|k| Ok(self.reduced_space(k)?.dimension))
            .collect()
    }
}

/// A graded piece of the reduced Orlik–Solomon algebra.
#[derive(Clone, Debug)]
pub struct ReducedOsSpace<F: Field> {
    pub degree: usize,
    /// `S` with `S ∪ {0}` nbc, lexicographic.
    pub index_sets: Vec<ElementSet>,
    pub basis: Vec<ExteriorElement<F>>,
    /// Dimension of the span of all degree-`k` products of the generators.
    pub dimension: usize,
}

/// `dim OS^k` for `k = 0..=r` over a field chosen at runtime.
pub fn os_dimensions(m: &Matroid, field: FieldSpec) -> Result<Vec<usize>> {
    match field {
        FieldSpec::Rationals => OsAlgebra::new(m, Rationals)?.dimensions(),
        FieldSpec::Prime(p) => OsAlgebra::new(m, PrimeField::new(p)?)?.dimensions(),
    }
}

/// Reduced dimensions for `k = 0..r-1` over a field chosen at runtime.
pub fn reduced_os_dimensions(m: &Matroid, field: FieldSpec) -> Result<Vec<usize>> {
    match field {
        FieldSpec::Rationals => OsAlgebra::new(m, Rationals)?.reduced_dimensions(),
        FieldSpec::Prime(p) => OsAlgebra::new(m, PrimeField::new(p)?)?.reduced_dimensions(),
    }
}

#[cfg(test)]
mod tests;
