//! Bit-vector sets of group element indices.
//!
//! An [`ElementSet`] is the universal carrier for subgroups, cosets, order
//! layers and kernels: a fixed-width bit-vector whose width is the order of
//! the group it lives in. All set algebra is word-parallel.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    nbits: usize,
    blocks: Vec<u64>,
}

impl ElementSet {
    pub fn empty(nbits: usize) -> Self {
        ElementSet { nbits, blocks: vec![0; nbits.div_ceil(64)] }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = ElementSet { nbits, blocks: vec![!0u64; nbits.div_ceil(64)] };
        s.mask_tail();
        s
    }

    pub fn singleton(nbits: usize, index: usize) -> Self {
        let mut s = Self::empty(nbits);
        s.insert(index);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, indices: I) -> Self {
        let mut s = Self::empty(nbits);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Width of the bit-vector, i.e. the order of the carrier group.
    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < self.nbits);
        self.blocks[index / 64] |= 1u64 << (index % 64);
    }

    pub fn remove(&mut self, index: usize) {
        debug_assert!(index < self.nbits);
        self.blocks[index / 64] &= !(1u64 << (index % 64));
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        (self.blocks[index / 64] >> (index % 64)) & 1 == 1
    }

    /// Cardinality.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(w, &block)| SetBits { block, base: w * 64 })
    }

    pub fn min_element(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.nbits, other.nbits);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    fn mask_tail(&mut self) {
        let used = self.nbits % 64;
        if used != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

struct SetBits {
    block: u64,
    base: usize,
}

impl Iterator for SetBits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.block == 0 {
            return None;
        }
        let bit = self.block.trailing_zeros() as usize;
        self.block &= self.block - 1;
        Some(self.base + bit)
    }
}

/// Orders by cardinality first, then lexicographically on the member list
/// (the set containing the smaller first-differing index sorts first).
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.blocks.iter().zip(&other.blocks) {
                if a != b {
                    let bit = (a ^ b).trailing_zeros();
                    return if (a >> bit) & 1 == 1 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
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

/// Serializes as the ascending list of member indices.
impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}
