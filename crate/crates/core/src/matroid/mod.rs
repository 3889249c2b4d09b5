//! Matroids on the ground set `{0, .., n}` with exact rank oracles.
//!
//! A [`Matroid`] is immutable once built. Ranks of all subsets, the basis
//! list and the circuit list are computed lazily, once, and cached.

mod descriptor;
mod graphic;
mod linear;
mod partition;

use std::collections::HashSet;
use std::sync::OnceLock;

use num_rational::BigRational;

pub use descriptor::Descriptor;
pub use graphic::GraphicRep;
pub use linear::{LinearRep, Matrix};
pub use partition::OrderedSetPartition;

use crate::error::{Result, WorkbenchError};
use crate::field::FieldSpec;
use crate::subset::{ElementSet, MAX_ELEMENTS};

/// Default cap on `#E` for basis and circuit enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;
/// Cap on `#E` for the full table of subset ranks.
pub const RANK_TABLE_LIMIT: usize = 24;
/// Explicit basis lists up to this length are checked against the
/// basis-exchange axiom.
pub const BASIS_VALIDATION_LIMIT: usize = 100_000;

/// How the rank oracle is realised.
#[derive(Clone, Debug)]
pub enum Backing {
    Linear(LinearRep),
    Uniform { rank: usize },
    Graphic(GraphicRep),
    Bases(BasesRep),
}

#[derive(Clone, Debug)]
pub struct BasesRep {
    bases: Vec<ElementSet>,
    /// Whether the exchange axiom was checked on construction.
    validated: bool,
}

impl BasesRep {
    pub fn bases(&self) -> &[ElementSet] {
        &self.bases
    }

    pub fn validated(&self) -> bool {
        self.validated
    }
}

#[derive(Clone, Debug)]
pub struct Matroid {
    size: usize,
    backing: Backing,
    rank: usize,
    loops: ElementSet,
    coloops: ElementSet,
    enumeration_limit: usize,
    rank_table: OnceLock<Vec<u8>>,
    bases: OnceLock<Vec<ElementSet>>,
    circuits: OnceLock<Vec<ElementSet>>,
}

impl Matroid {
    fn from_backing(size: usize, backing: Backing) -> Result<Self> {
        if size == 0 {
            return Err(WorkbenchError::invalid("the ground set must be nonempty"));
        }
        if size > MAX_ELEMENTS {
            return Err(WorkbenchError::too_large(
                "ground set",
                size as u64,
                MAX_ELEMENTS as u64,
            ));
        }
        let mut m = Matroid {
            size,
            backing,
            rank: 0,
            loops: ElementSet::EMPTY,
            coloops: ElementSet::EMPTY,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
            rank_table: OnceLock::new(),
            bases: OnceLock::new(),
            circuits: OnceLock::new(),
        };
        let full = ElementSet::full(size);
        m.rank = m.raw_rank(full);
        m.loops = (0..size)
            .filter(|&e| m.raw_rank(ElementSet::singleton(e)) == 0)
            .collect();
        m.coloops = (0..size)
            .filter(|&e| m.raw_rank(full.remove(e)) + 1 == m.rank)
            .collect();
        Ok(m)
    }

    /// Column matroid of `matrix` (rows of entries) over `field`.
    pub fn from_matrix(field: FieldSpec, matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        let ncols = matrix.first().map_or(0, Vec::len);
        if matrix.is_empty() || ncols == 0 {
            return Err(WorkbenchError::invalid("matrix has no columns"));
        }
        let rep = LinearRep::from_entries(field, matrix, ncols)?;
        Self::from_backing(ncols, Backing::Linear(rep))
    }

    /// Convenience wrapper for integer matrices.
    pub fn from_integer_matrix(field: FieldSpec, matrix: &[Vec<i64>]) -> Result<Self> {
        let rows = matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self::from_matrix(field, rows)
    }

    /// `U_{r,n}`: every `r`-subset of an `n`-set is a basis.
    pub fn uniform(rank: usize, size: usize) -> Result<Self> {
        if rank > size {
            return Err(WorkbenchError::invalid(format!(
                "U_{{{rank},{size}}} has rank above size"
            )));
        }
        Self::from_backing(size, Backing::Uniform { rank })
    }

    /// The Boolean matroid `U_{n,n}`.
    pub fn boolean(size: usize) -> Result<Self> {
        Self::uniform(size, size)
    }

    /// Cycle matroid of a multigraph; edge `i` is element `i`.
    pub fn graphic(edges: &[(usize, usize)]) -> Result<Self> {
        let g = GraphicRep::new(edges)?;
        Self::from_backing(edges.len(), Backing::Graphic(g))
    }

    /// Matroid from an explicit basis list on `{0, .., size-1}`.
    pub fn from_bases(size: usize, bases: Vec<ElementSet>) -> Result<Self> {
        if size == 0 || size > MAX_ELEMENTS {
            return Err(WorkbenchError::invalid(format!("bad ground set size {size}")));
        }
        let mut bases = bases;
        bases.sort();
        bases.dedup();
        let Some(first) = bases.first() else {
            return Err(WorkbenchError::invalid("a matroid needs at least one basis"));
        };
        let r = first.len();
        let full = ElementSet::full(size);
        if bases.iter().any(|b| b.len() != r || !b.is_subset(full)) {
            return Err(WorkbenchError::invalid(
                "bases must be equicardinal subsets of the ground set",
            ));
        }
        let validated = bases.len() <= BASIS_VALIDATION_LIMIT;
        if validated {
            check_exchange_axiom(&bases)?;
        }
        Self::from_backing(size, Backing::Bases(BasesRep { bases, validated }))
    }

    pub fn with_enumeration_limit(mut self, limit: usize) -> Self {
        self.enumeration_limit = limit;
        self
    }

    /// Number of elements `n + 1`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    /// `r = rank(E)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    pub fn loops(&self) -> ElementSet {
        self.loops
    }

    pub fn coloops(&self) -> ElementSet {
        self.coloops
    }

    /// No zero columns: the realised subspace lies in no coordinate
    /// hyperplane.
    pub fn is_loopless(&self) -> bool {
        self.loops.is_empty()
    }

    /// Whether the backing is an actual realisation (matrix, graph or
    /// uniform matroid, the latter realisable over `Q`).
    pub fn is_realized(&self) -> bool {
        !matches!(self.backing, Backing::Bases(_))
    }

    fn raw_rank(&self, a: ElementSet) -> usize {
        match &self.backing {
            Backing::Linear(l) => l.rank(a),
            Backing::Uniform { rank } => a.len().min(*rank),
            Backing::Graphic(g) => g.rank(a),
            Backing::Bases(b) => b.bases.iter().map(|x| x.intersection(a).len()).max().unwrap_or(0),
        }
    }

    /// The field of a matrix backing; the rationals for every other backing.
    pub fn natural_field(&self) -> FieldSpec {
        match &self.backing {
            Backing::Linear(rep) => rep.field_spec(),
            _ => FieldSpec::Rationals,
        }
    }

    /// `rk(A)`. Fails if `A` has elements outside the ground set.
    pub fn rank_of(&self, a: ElementSet) -> Result<usize> {
        if !a.is_subset(self.ground_set()) {
            return Err(WorkbenchError::invalid(format!(
                "{a:?} is not a subset of a {}-element ground set",
                self.size
            )));
        }
        Ok(self.rank_unchecked(a))
    }

    pub(crate) fn rank_unchecked(&self, a: ElementSet) -> usize {
        match self.rank_table.get() {
            Some(t) => t[a.bits() as usize] as usize,
            None => self.raw_rank(a),
        }
    }

    /// Ranks of all `2^#E` subsets, indexed by bitmask.
    pub fn rank_table(&self) -> Result<&[u8]> {
        if self.size > RANK_TABLE_LIMIT {
            return Err(WorkbenchError::too_large(
                "ground set for the rank table",
                self.size as u64,
                RANK_TABLE_LIMIT as u64,
            ));
        }
        Ok(self.rank_table.get_or_init(|| {
            (0..1u64 << self.size)
                .map(|bits| self.raw_rank(ElementSet::from_bits(bits)) as u8)
                .collect()
        }))
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.size > self.enumeration_limit {
            return Err(WorkbenchError::too_large(
                "ground set for enumeration",
                self.size as u64,
                self.enumeration_limit as u64,
            ));
        }
        Ok(())
    }

    /// All bases in lexicographic order.
    pub fn bases(&self) -> Result<&[ElementSet]> {
        self.check_enumerable()?;
        if let Some(b) = self.bases.get() {
            return Ok(b);
        }
        let bases = match &self.backing {
            Backing::Bases(b) => b.bases.clone(),
            _ => {
                let table = self.rank_table()?;
                ElementSet::k_subsets(self.size, self.rank)
                    .filter(|s| table[s.bits() as usize] as usize == self.rank)
                    .collect()
            }
        };
        Ok(self.bases.get_or_init(|| bases))
    }

    /// All minimal dependent sets in lexicographic order.
    pub fn circuits(&self) -> Result<&[ElementSet]> {
        self.check_enumerable()?;
        if let Some(c) = self.circuits.get() {
            return Ok(c);
        }
        let table = self.rank_table()?;
        let rk = |s: ElementSet| table[s.bits() as usize] as usize;
        let mut circuits: Vec<ElementSet> = self
            .ground_set()
            .subsets()
            .filter(|&s| {
                let k = s.len();
                k > 0 && rk(s) + 1 == k && s.iter().all(|e| rk(s.remove(e)) + 1 == k)
            })
            .collect();
        circuits.sort();
        Ok(self.circuits.get_or_init(|| circuits))
    }

    pub fn is_independent(&self, a: ElementSet) -> bool {
        self.rank_unchecked(a) == a.len()
    }

    pub fn is_basis(&self, a: ElementSet) -> bool {
        a.len() == self.rank && self.is_independent(a)
    }

    /// Delete `deleted`, contract `contracted`, and re-index the surviving
    /// elements in their original order.
    pub fn minor(&self, deleted: ElementSet, contracted: ElementSet) -> Result<Matroid> {
        let full = self.ground_set();
        if !deleted.is_subset(full) || !contracted.is_subset(full) {
            return Err(WorkbenchError::invalid("minor arguments leave the ground set"));
        }
        if !deleted.is_disjoint(contracted) {
            return Err(WorkbenchError::invalid("deleted and contracted sets overlap"));
        }
        let removed = deleted.union(contracted);
        let new_size = self.size - removed.len();
        if new_size == 0 {
            return Err(WorkbenchError::invalid("minor would have an empty ground set"));
        }
        if removed.is_empty() {
            return Ok(self.clone());
        }
        let backing = match &self.backing {
            Backing::Linear(l) => Backing::Linear(l.minor(deleted, contracted)),
            Backing::Uniform { rank } => {
                let remaining = rank - contracted.len().min(*rank);
                Backing::Uniform {
                    rank: remaining.min(new_size),
                }
            }
            Backing::Graphic(g) => Backing::Graphic(g.minor(deleted, contracted)),
            Backing::Bases(_) => {
                let rc = self.rank_unchecked(contracted);
                let target = self.rank_unchecked(full.difference(deleted)) - rc;
                let rest = full.difference(removed);
                let bases: Vec<ElementSet> = rest
                    .subsets()
                    .filter(|s| s.len() == target && self.rank_unchecked(s.union(contracted)) - rc == target)
                    .map(|s| s.compress(removed))
                    .collect();
                let mut bases = bases;
                bases.sort();
                Backing::Bases(BasesRep { bases, validated: true })
            }
        };
        Ok(Matroid::from_backing(new_size, backing)?.with_enumeration_limit(self.enumeration_limit))
    }

    pub fn delete(&self, e: usize) -> Result<Matroid> {
        self.minor(ElementSet::singleton(e), ElementSet::EMPTY)
    }

    pub fn contract(&self, e: usize) -> Result<Matroid> {
        self.minor(ElementSet::EMPTY, ElementSet::singleton(e))
    }

    /// The dual matroid, `rk*(A) = #A + rk(E \ A) - r`.
    pub fn dual(&self) -> Matroid {
        let full = self.ground_set();
        let backing = match &self.backing {
            Backing::Linear(l) => Backing::Linear(l.dual()),
            Backing::Uniform { rank } => Backing::Uniform { rank: self.size - rank },
            Backing::Bases(b) => {
                let mut bases: Vec<ElementSet> = b.bases.iter().map(|x| full.difference(*x)).collect();
                bases.sort();
                Backing::Bases(BasesRep {
                    bases,
                    validated: b.validated,
                })
            }
            Backing::Graphic(_) => {
                let mut bases: Vec<ElementSet> = ElementSet::k_subsets(self.size, self.rank)
                    .filter(|s| self.is_basis(*s))
                    .map(|s| full.difference(s))
                    .collect();
                bases.sort();
                Backing::Bases(BasesRep { bases, validated: true })
            }
        };
        Matroid::from_backing(self.size, backing)
            .expect("dual of a valid matroid is valid")
            .with_enumeration_limit(self.enumeration_limit)
    }

    /// Memoisation key: ground set size, rank and the sorted basis list.
    ///
    /// Label-sensitive: isomorphic matroids with different labellings get
    /// different keys.
    pub fn canonical_key(&self) -> Result<Vec<u8>> {
        let bases = self.bases()?;
        let mut key = Vec::with_capacity(2 + 8 * bases.len());
        key.push(self.size as u8);
        key.push(self.rank as u8);
        for b in bases {
            key.extend_from_slice(&b.bits().to_le_bytes());
        }
        Ok(key)
    }

    /// No proper nonempty `A` with `rk(A) + rk(E \ A) = r`.
    pub fn is_connected(&self) -> Result<bool> {
        let table = self.rank_table()?;
        let full = self.ground_set();
        let rk = |s: ElementSet| table[s.bits() as usize] as usize;
        Ok(full
            .remove(0)
            .subsets()
            .map(|s| s.insert(0))
            .filter(|&a| a != full)
            .all(|a| rk(a) + rk(full.difference(a)) > self.rank))
    }

    /// Exhaustive check of normalisation, boundedness, unit increase,
    /// monotonicity and submodularity.
    pub fn check_rank_axioms(&self) -> Result<()> {
        let table = self.rank_table()?;
        let rk = |s: ElementSet| table[s.bits() as usize] as usize;
        let full = self.ground_set();
        if rk(ElementSet::EMPTY) != 0 {
            return Err(WorkbenchError::invariant("rank of the empty set is nonzero"));
        }
        for a in full.subsets() {
            if rk(a) > a.len() {
                return Err(WorkbenchError::invariant(format!("rank exceeds size at {a:?}")));
            }
            for e in full.difference(a).iter() {
                let d = rk(a.insert(e)) as i64 - rk(a) as i64;
                if !(0..=1).contains(&d) {
                    return Err(WorkbenchError::invariant(format!("unit increase fails at {a:?}+{e}")));
                }
                for f in full.difference(a).iter().filter(|&f| f > e) {
                    // local submodularity
                    if rk(a.insert(e)) + rk(a.insert(f)) < rk(a.insert(e).insert(f)) + rk(a) {
                        return Err(WorkbenchError::invariant(format!("submodularity fails at {a:?}")));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_exchange_axiom(bases: &[ElementSet]) -> Result<()> {
    let set: HashSet<ElementSet> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                let ok = b2.difference(b1).iter().any(|y| set.contains(&b1.remove(x).insert(y)));
                if !ok {
                    return Err(WorkbenchError::invalid(format!(
                        "basis exchange fails for {b1:?}, {b2:?} at {x}"
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
