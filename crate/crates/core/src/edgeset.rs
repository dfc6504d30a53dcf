//! Fixed-width bitsets over a named ground set.
//!
//! An [`EdgeSet`] is the common currency for circuits, cuts, fibers and
//! GF(2) vectors. Every set remembers the tag of the [`Ground`] it was built
//! over; binary operations between sets of different grounds are refused.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Identity of a ground set, derived from its cell names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundTag(pub u64);

/// A finite, ordered set of named cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ground {
    tag: GroundTag,
    cells: Vec<String>,
}

impl Ground {
    pub fn new(cells: Vec<String>) -> Arc<Ground> {
        // FNV-1a; stable across runs and platforms.
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for cell in &cells {
            for b in cell.bytes().chain(std::iter::once(0xff)) {
                h ^= b as u64;
                h = h.wrapping_mul(0x0100_0000_01b3);
            }
        }
        h ^= cells.len() as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
        Arc::new(Ground { tag: GroundTag(h), cells })
    }

    pub fn tag(&self) -> GroundTag {
        self.tag
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[String] {
        &self.cells
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::empty(self.tag, self.cells.len())
    }

    pub fn full_set(&self) -> EdgeSet {
        let mut s = self.empty_set();
        for i in 0..self.cells.len() {
            s.insert(i);
        }
        s
    }

    /// Builds a set from cell indices, rejecting out-of-range indices.
    pub fn set_of<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<EdgeSet> {
        let mut s = self.empty_set();
        for i in indices {
            if i >= self.cells.len() {
                return Err(Error::Parse(format!(
                    "cell index {i} out of range for ground of size {}",
                    self.cells.len()
                )));
            }
            s.insert(i);
        }
        Ok(s)
    }
}

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    tag: GroundTag,
    width: usize,
    words: Words,
}

impl EdgeSet {
    pub fn empty(tag: GroundTag, width: usize) -> EdgeSet {
        EdgeSet { tag, width, words: SmallVec::from_elem(0, width.div_ceil(64)) }
    }

    /// Builds a set from the low `width` bits of `mask`; `width` must be ≤ 64.
    pub fn from_mask(tag: GroundTag, width: usize, mask: u64) -> EdgeSet {
        assert!(width <= 64, "from_mask needs a ground of at most 64 cells");
        let mut s = EdgeSet::empty(tag, width);
        if width > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub fn tag(&self) -> GroundTag {
        self.tag
    }

    /// Size of the ground set.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width, "cell {i} outside ground of size {}", self.width);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.width {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.width);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Number of cells in the set.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The set as a single word; only valid for grounds of at most 64 cells.
    pub fn mask(&self) -> u64 {
        debug_assert!(self.width <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    fn check(&self, other: &EdgeSet) -> Result<()> {
        if self.tag != other.tag || self.width != other.width {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// Mod-2 sum `(A ∪ B) − (A ∩ B)`.
    pub fn sym_diff(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        Ok(self.xor_unchecked(other))
    }

    pub fn union(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        let mut out = self.clone();
        out.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a |= b);
        Ok(out)
    }

    pub fn intersection(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        let mut out = self.clone();
        out.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= b);
        Ok(out)
    }

    pub fn difference(&self, other: &EdgeSet) -> Result<EdgeSet> {
        self.check(other)?;
        let mut out = self.clone();
        out.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a &= !b);
        Ok(out)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.subset_unchecked(other))
    }

    pub(crate) fn xor_unchecked(&self, other: &EdgeSet) -> EdgeSet {
        debug_assert_eq!(self.tag, other.tag);
        let mut out = self.clone();
        out.xor_assign_unchecked(other);
        out
    }

    pub(crate) fn xor_assign_unchecked(&mut self, other: &EdgeSet) {
        self.words.iter_mut().zip(&other.words).for_each(|(a, b)| *a ^= b);
    }

    pub(crate) fn subset_unchecked(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.tag, other.tag);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersects_unchecked(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    #[cfg(test)]
    pub(crate) fn and_count_unchecked(&self, other: &EdgeSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

/// Mod-2 addition of two edge sets.
pub fn mod2_add(a: &EdgeSet, b: &EdgeSet) -> Result<EdgeSet> {
    a.sym_diff(b)
}

/// Canonical order: lexicographic on the sorted member lists.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.tag.cmp(&other.tag))
            .then(self.width.cmp(&other.width))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<Ground> {
        Ground::new(vec!["a".into(), "b".into(), "c".into()])
    }

    #[test]
    fn mod2_addition() {
        let g = abc();
        let ab = g.set_of([0, 1]).unwrap();
        let bc = g.set_of([1, 2]).unwrap();
        assert_eq!(mod2_add(&ab, &bc).unwrap().to_vec(), vec![0, 2]);
        assert!(mod2_add(&ab, &ab).unwrap().is_empty());
        assert_eq!(mod2_add(&ab, &g.empty_set()).unwrap(), ab);
    }

    #[test]
    fn ground_mismatch_is_refused() {
        let g = abc();
        let h = Ground::new(vec!["x".into(), "y".into(), "z".into()]);
        assert_ne!(g.tag(), h.tag());
        let a = g.set_of([0]).unwrap();
        let b = h.set_of([0]).unwrap();
        assert!(matches!(a.sym_diff(&b), Err(Error::GroundMismatch)));
        assert!(matches!(a.is_subset(&b), Err(Error::GroundMismatch)));
    }

    #[test]
    fn wide_sets_iterate_across_words() {
        let g = Ground::new((0..150).map(|i| format!("e{i}")).collect());
        let s = g.set_of([0, 63, 64, 127, 149]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 63, 64, 127, 149]);
        assert_eq!(s.count(), 5);
        assert_eq!(s.first(), Some(0));
        assert!(g.set_of([150]).is_err());
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let g = abc();
        let mut sets = vec![g.set_of([1]).unwrap(), g.set_of([0, 2]).unwrap(), g.set_of([0, 1]).unwrap()];
        sets.sort();
        let lists: Vec<_> = sets.iter().map(EdgeSet::to_vec).collect();
        assert_eq!(lists, vec![vec![0, 1], vec![0, 2], vec![1]]);
    }
}
