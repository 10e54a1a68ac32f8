//! Growable bit sets over small nonnegative integers.
//!
//! Used both for the vertex (atom) sets of faces and for face-index sets such
//! as poset reachability rows.

use alloc::vec::Vec;
use core::fmt;

const BITS: usize = 64;

/// A set of small nonnegative integers stored in 64-bit blocks.
///
/// The block vector never ends in a zero block, so `Eq`, `Ord` and `Hash`
/// derive directly from the representation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitSet {
    blocks: Vec<u64>,
}

impl BitSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::new();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    pub fn insert(&mut self, i: usize) {
        let block = i / BITS;
        if block >= self.blocks.len() {
            self.blocks.resize(block + 1, 0);
        }
        self.blocks[block] |= 1u64 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        let block = i / BITS;
        if block < self.blocks.len() {
            self.blocks[block] &= !(1u64 << (i % BITS));
            self.trim();
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        let block = i / BITS;
        block < self.blocks.len() && self.blocks[block] & (1u64 << (i % BITS)) != 0
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        if self.blocks.len() > other.blocks.len() {
            return false;
        }
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| a & b)
            .collect();
        while blocks.last() == Some(&0) {
            blocks.pop();
        }
        BitSet { blocks }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        let (longer, shorter) = if self.blocks.len() >= other.blocks.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut blocks = longer.blocks.clone();
        for (b, s) in blocks.iter_mut().zip(shorter.blocks.iter()) {
            *b |= s;
        }
        BitSet { blocks }
    }

    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The set with every element increased by `offset`.
    pub fn shift_up(&self, offset: usize) -> BitSet {
        let mut s = BitSet::new();
        for i in self.iter() {
            s.insert(i + offset);
        }
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            (0..BITS).filter_map(move |k| {
                if block & (1u64 << k) != 0 {
                    Some(bi * BITS + k)
                } else {
                    None
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn trim(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = BitSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}
