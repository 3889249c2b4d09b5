//! Subsets of a ground set `{0, .., n}` packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, .., 63}` stored as a bitmask.
///
/// The `Ord` implementation is the lexicographic order on the increasing
/// element sequences, so `{0,1} < {0,1,2} < {0,2} < {1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        ElementSet(1u64 << e)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(self, e: usize) -> Self {
        ElementSet(self.0 | 1u64 << e)
    }

    pub fn remove(self, e: usize) -> Self {
        ElementSet(self.0 & !(1u64 << e))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let e = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly smaller than `e`.
    pub fn rank_of(self, e: usize) -> usize {
        (self.0 & ((1u64 << e) - 1)).count_ones() as usize
    }

    /// Re-index the members of `self` after removing the elements of
    /// `removed` from the ground set, preserving the order of survivors.
    pub fn compress(self, removed: ElementSet) -> ElementSet {
        debug_assert!(self.is_disjoint(removed));
        self.iter().map(|e| e - removed.rank_of(e)).collect()
    }

    /// All `k`-subsets of `{0, .., n-1}` in lexicographic order.
    pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = ElementSet> {
        (0..n).combinations(k).map(|c| c.into_iter().collect())
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = ElementSet> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ElementSet(cur))
        })
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ElementSet::EMPTY, |s, e| s.insert(e))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let e = (self.0 ^ other.0).trailing_zeros();
        // Both sets agree below `e` and exactly one of them contains `e`.
        let self_has = self.0 >> e & 1 == 1;
        let lacking = if self_has { other.0 } else { self.0 };
        let ord = if lacking >> e >> 1 != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        };
        if self_has {
            ord
        } else {
            ord.reverse()
        }
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
