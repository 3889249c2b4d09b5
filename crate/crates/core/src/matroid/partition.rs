use crate::error::{Result, WorkbenchError};
use crate::subset::ElementSet;

/// An ordered set partition `(F_1, .., F_l)` of the ground set, indexing a
/// cone of the permutohedral fan. Complete flags (all blocks singletons)
/// correspond to permutations and to torus-fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<ElementSet>,
}

impl OrderedSetPartition {
    pub fn new(ground_size: usize, blocks: Vec<ElementSet>) -> Result<Self> {
        let mut seen = ElementSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(WorkbenchError::invalid("empty block in ordered set partition"));
            }
            if !b.is_disjoint(seen) {
                return Err(WorkbenchError::invalid("blocks of an ordered set partition overlap"));
            }
            seen = seen.union(*b);
        }
        if seen != ElementSet::full(ground_size) {
            return Err(WorkbenchError::invalid("blocks do not cover the ground set"));
        }
        Ok(OrderedSetPartition { blocks })
    }

    /// The complete flag of a permutation `w`: blocks `{w_1}, .., {w_{n+1}}`.
    pub fn from_permutation(w: &[usize]) -> Result<Self> {
        if w.iter().any(|&e| e >= w.len()) {
            return Err(WorkbenchError::invalid(format!("{w:?} is not a permutation")));
        }
        Self::new(w.len(), w.iter().map(|&e| ElementSet::singleton(e)).collect())
    }

    pub fn blocks(&self) -> &[ElementSet] {
        &self.blocks
    }

    /// `G_0 = {} < G_1 < .. < G_l = E` with `G_i = F_1 u .. u F_i`.
    pub fn flag(&self) -> Vec<ElementSet> {
        let mut acc = ElementSet::EMPTY;
        let mut out = vec![acc];
        for b in &self.blocks {
            acc = acc.union(*b);
            out.push(acc);
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}
