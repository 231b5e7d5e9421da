//! Small bitsets of dense ids.
//!
//! Both poset elements and complex vertex slots are dense indices below 64,
//! so one `u64` word per set covers every workload in the crate.

use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

/// Maximum number of ids an [`ElemSet`] can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A set of ids in `0..64`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(id: usize) -> Self {
        debug_assert!(id < MAX_ELEMENTS);
        ElemSet(1 << id)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, id: usize) -> bool {
        id < MAX_ELEMENTS && self.0 & (1 << id) != 0
    }

    pub fn insert(&mut self, id: usize) {
        debug_assert!(id < MAX_ELEMENTS);
        self.0 |= 1 << id;
    }

    pub fn remove(&mut self, id: usize) {
        self.0 &= !(1u64 << id);
    }

    pub fn with(self, id: usize) -> Self {
        let mut s = self;
        s.insert(id);
        s
    }

    pub fn without(self, id: usize) -> Self {
        let mut s = self;
        s.remove(id);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ElemSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest id in the set, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over member ids.
    pub fn iter(self) -> ElemSetIter {
        ElemSetIter(self.0)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for id in iter {
            s.insert(id);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = ElemSetIter;

    fn into_iter(self) -> ElemSetIter {
        self.iter()
    }
}

impl BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl Sub for ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, id) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

pub struct ElemSetIter(u64);

impl Iterator for ElemSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let id = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(id)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemSetIter {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn basic_ops() {
        let mut s = ElemSet::EMPTY;
        assert!(s.is_empty());
        s.insert(3);
        s.insert(0);
        assert_eq!(s.len(), 2);
        assert!(s.contains(0) && s.contains(3) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 3]);
        assert_eq!(s.first(), Some(0));
        s.remove(0);
        assert_eq!(s.iter().collect::<Vec<_>>(), [3]);
    }

    #[test]
    fn algebra() {
        let a: ElemSet = [0, 1, 2].into_iter().collect();
        let b: ElemSet = [1, 2, 3].into_iter().collect();
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [1, 2]);
        assert_eq!((a | b).len(), 4);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [0]);
        assert!((a & b).is_subset_of(a));
        assert!(ElemSet::full(3) == a);
    }
}
