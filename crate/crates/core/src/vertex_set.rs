use std::fmt;

use fixedbitset::FixedBitSet;

use crate::{Error, Result, Vertex};

/// A set of vertex ids drawn from a fixed universe `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from explicit members, rejecting ids outside `0..n`.
    pub fn from_vertices(n: usize, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut set = Self::empty(n);
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Interprets bit `i` of `mask` as membership of vertex `i`. Bits at or
    /// above `n` are ignored.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut set = Self::empty(n);
        for v in 0..n.min(64) {
            if mask >> v & 1 == 1 {
                set.bits.insert(v);
            }
        }
        set
    }

    /// The membership bitmask, or `None` when the universe exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        if self.universe() > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |m, v| m | 1 << v))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    /// Panics if `v` lies outside the universe.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe {}",
            self.universe()
        );
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let was = self.contains(v);
        if was {
            self.bits.set(v, false);
        }
        was
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        VertexSet { bits }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet { bits }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn first(&self) -> Option<Vertex> {
        self.bits.minimum()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub(crate) fn check_universe(&self, n: usize) -> Result<()> {
        if self.universe() == n {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: n,
                found: self.universe(),
            })
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 2, 4]).unwrap();
        let b = VertexSet::from_vertices(6, [2, 3]).unwrap();
        assert_eq!(a.complement().to_vec(), vec![1, 3, 5]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 2, 3, 4]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 4]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(VertexSet::full(6).len(), 6);
        assert!(VertexSet::empty(6).is_empty());
    }

    #[test]
    fn rejects_out_of_range_members() {
        assert_eq!(
            VertexSet::from_vertices(3, [1, 3]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::from_mask(5, 0b10110);
        assert_eq!(s.to_vec(), vec![1, 2, 4]);
        assert_eq!(s.to_mask(), Some(0b10110));
        assert_eq!(VertexSet::from_mask(3, 0b1111).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn insert_and_remove() {
        let mut s = VertexSet::empty(4);
        assert!(s.insert(2));
        assert!(!s.insert(2));
        assert!(s.remove(2));
        assert!(!s.remove(2));
        assert!(s.is_empty());
    }
}
