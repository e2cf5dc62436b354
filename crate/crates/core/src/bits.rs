//! Fixed-width bitsets over a universe of at most 64 indices.
//!
//! Both argument sets and atom sets are represented by [`BitSet`]. Compiled
//! theories name argument `~a` with the same index as atom `a`, so the
//! conversion between an atom set `C` and its abducibles `¬C` is the identity
//! on the underlying bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Largest universe a [`BitSet`] can index.
pub const MAX_UNIVERSE: usize = 64;

/// A finite set of indices below [`MAX_UNIVERSE`].
///
/// `Ord` is the canonical enumeration order used for every sorted output:
/// smaller sets first, ties broken by comparing the ascending member lists
/// lexicographically.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BitSet(u64);

/// A set of arguments of a theory.
pub type ArgumentSet = BitSet;

/// A set of program atoms.
pub type AtomSet = BitSet;

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        BitSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(index: usize) -> Self {
        debug_assert!(index < MAX_UNIVERSE);
        BitSet(1u64 << index)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n >= MAX_UNIVERSE {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_UNIVERSE && self.0 & (1u64 << index) != 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u64 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u64 << index);
    }

    pub fn with(self, index: usize) -> Self {
        BitSet(self.0 | (1u64 << index))
    }

    pub fn without(self, index: usize) -> Self {
        BitSet(self.0 & !(1u64 << index))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: BitSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(self, other: BitSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: BitSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: BitSet) -> Self {
        BitSet(self.0 | other.0)
    }

    pub fn intersection(self, other: BitSet) -> Self {
        BitSet(self.0 & other.0)
    }

    pub fn difference(self, other: BitSet) -> Self {
        BitSet(self.0 & !other.0)
    }

    /// Complement relative to the universe `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        BitSet::full(n).difference(self)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Every subset of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }
}

/// Ascending member iterator of a [`BitSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let index = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(index)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Subset iterator using the carry-ripple trick.
#[derive(Clone)]
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = BitSet;

    fn next(&mut self) -> Option<BitSet> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(BitSet(current))
    }
}

impl IntoIterator for BitSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = BitSet::EMPTY;
        for index in iter {
            set.insert(index);
        }
        set
    }
}

impl<const N: usize> From<[usize; N]> for BitSet {
    fn from(indices: [usize; N]) -> Self {
        indices.into_iter().collect()
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for BitSet {
    type Output = BitSet;
    fn bitor(self, rhs: BitSet) -> BitSet {
        self.union(rhs)
    }
}

impl BitAnd for BitSet {
    type Output = BitSet;
    fn bitand(self, rhs: BitSet) -> BitSet {
        self.intersection(rhs)
    }
}

impl Sub for BitSet {
    type Output = BitSet;
    fn sub(self, rhs: BitSet) -> BitSet {
        self.difference(rhs)
    }
}

impl Not for BitSet {
    type Output = BitSet;
    fn not(self) -> BitSet {
        BitSet(!self.0)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorts in canonical order and removes duplicates.
pub(crate) fn sort_canonical<T: Ord>(items: &mut Vec<T>) {
    items.sort();
    items.dedup();
}

/// The inclusion-maximal members of `sets`, in canonical order.
pub fn maximal_sets(sets: &[BitSet]) -> Vec<BitSet> {
    let mut out: Vec<BitSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| s.is_proper_subset(*t)))
        .collect();
    sort_canonical(&mut out);
    out
}

/// The inclusion-minimal members of `sets`, in canonical order.
pub fn minimal_sets(sets: &[BitSet]) -> Vec<BitSet> {
    let mut out: Vec<BitSet> = sets
        .iter()
        .copied()
        .filter(|s| !sets.iter().any(|t| t.is_proper_subset(*s)))
        .collect();
    sort_canonical(&mut out);
    out
}
