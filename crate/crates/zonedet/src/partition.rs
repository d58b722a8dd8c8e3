//! Block partitions of the index range `0..n`.

use crate::error::{Error, Result};
use std::ops::Range;

/// A partition of `{0..n}` into `k` consecutive diagonal blocks.
///
/// Stored as strictly increasing offsets `0 = o_0 < o_1 < ... < o_k = n`;
/// block `b` covers the index range `o_b..o_{b+1}`. Blocks may have unequal
/// sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    offsets: Vec<usize>,
}

impl BlockPartition {
    /// Build a partition from explicit offsets (must start at 0 and be
    /// strictly increasing).
    pub fn from_offsets(offsets: Vec<usize>) -> Result<Self> {
        if offsets.len() < 2 {
            return Err(Error::InvalidPartition("need at least two offsets".into()));
        }
        if offsets[0] != 0 {
            return Err(Error::InvalidPartition("offsets must start at 0".into()));
        }
        if !offsets.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("offsets must be strictly increasing".into()));
        }
        Ok(BlockPartition { offsets })
    }

    /// Uniform blocks of `block_size`; a smaller trailing block is allowed
    /// when `block_size` does not divide `n`.
    pub fn uniform(n: usize, block_size: usize) -> Result<Self> {
        if n == 0 || block_size == 0 {
            return Err(Error::InvalidPartition("order and block size must be positive".into()));
        }
        let mut offsets: Vec<usize> = (0..=n / block_size).map(|b| b * block_size).collect();
        if *offsets.last().unwrap() != n {
            offsets.push(n);
        }
        BlockPartition::from_offsets(offsets)
    }

    /// The point partition `k = n` (every block is 1x1).
    pub fn point(n: usize) -> Self {
        BlockPartition { offsets: (0..=n).collect() }
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Number of blocks `k`.
    pub fn block_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Total order `n` covered by the partition.
    pub fn order(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Index range of block `b`.
    pub fn block_range(&self, b: usize) -> Range<usize> {
        self.offsets[b]..self.offsets[b + 1]
    }

    /// Which block a (0-based) index belongs to.
    pub fn block_of(&self, idx: usize) -> usize {
        debug_assert!(idx < self.order());
        match self.offsets.binary_search(&idx) {
            Ok(b) => b,
            Err(ins) => ins - 1,
        }
    }

    /// `Some(size)` when all blocks share the same size.
    pub fn equal_block_size(&self) -> Option<usize> {
        let first = self.offsets[1] - self.offsets[0];
        if self
            .offsets
            .windows(2)
            .all(|w| w[1] - w[0] == first)
        {
            Some(first)
        } else {
            None
        }
    }

    /// Fail unless the partition covers exactly `order` indices.
    pub fn check_covers(&self, order: usize) -> Result<()> {
        if self.order() != order {
            return Err(Error::PartitionMismatch { end: self.order(), order });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_and_ragged() {
        let p = BlockPartition::uniform(9, 3).unwrap();
        assert_eq!(p.offsets(), &[0, 3, 6, 9]);
        assert_eq!(p.equal_block_size(), Some(3));

        let q = BlockPartition::uniform(10, 3).unwrap();
        assert_eq!(q.offsets(), &[0, 3, 6, 9, 10]);
        assert_eq!(q.equal_block_size(), None);
    }

    #[test]
    fn block_lookup() {
        let p = BlockPartition::from_offsets(vec![0, 2, 5, 9]).unwrap();
        assert_eq!(p.block_count(), 3);
        assert_eq!(p.block_of(0), 0);
        assert_eq!(p.block_of(1), 0);
        assert_eq!(p.block_of(2), 1);
        assert_eq!(p.block_of(4), 1);
        assert_eq!(p.block_of(5), 2);
        assert_eq!(p.block_of(8), 2);
        assert_eq!(p.block_range(1), 2..5);
    }

    #[test]
    fn rejects_bad_offsets() {
        assert!(BlockPartition::from_offsets(vec![1, 3]).is_err());
        assert!(BlockPartition::from_offsets(vec![0, 3, 3]).is_err());
        assert!(BlockPartition::from_offsets(vec![0]).is_err());
    }

    #[test]
    fn point_partition() {
        let p = BlockPartition::point(4);
        assert_eq!(p.block_count(), 4);
        assert_eq!(p.equal_block_size(), Some(1));
    }
}
