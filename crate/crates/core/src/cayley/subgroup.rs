//! Subgroups of a table group as fixed-universe bitsets.

/// A set of element indices of one [`CayleyGroup`](super::CayleyGroup),
/// stored as a bitset over the group's element range.  Equality, hashing
/// and the canonical sort key all derive from the raw bits, so two values
/// compare equal exactly when they contain the same elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    universe: usize,
    bits: Vec<u64>,
    len: usize,
}

impl SubgroupSet {
    pub fn empty(universe: usize) -> Self {
        SubgroupSet {
            universe,
            bits: vec![0; universe.div_ceil(64)],
            len: 0,
        }
    }

    pub fn from_elements(universe: usize, elements: &[usize]) -> Self {
        let mut set = Self::empty(universe);
        for &x in elements {
            set.insert(x);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Number of elements in the set.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        debug_assert!(x < self.universe);
        self.bits[x / 64] & (1 << (x % 64)) != 0
    }

    /// Inserts `x`; returns true when it was new.
    pub(crate) fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.universe);
        let word = &mut self.bits[x / 64];
        let mask = 1 << (x % 64);
        if *word & mask == 0 {
            *word |= mask;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        debug_assert_eq!(self.universe, other.universe);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let len = bits.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            universe: self.universe,
            bits,
            len,
        }
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len);
        for (wi, &word) in self.bits.iter().enumerate() {
            let mut w = word;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * 64 + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Raw bits; the canonical dedup key.
    pub fn key(&self) -> &[u64] {
        &self.bits
    }

    /// Deterministic ordering: size first, then the sorted element list.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.len, self.elements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_len() {
        let mut s = SubgroupSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(0));
        assert!(s.contains(0));
        assert!(s.contains(129));
        assert!(!s.contains(64));
        assert_eq!(s.len(), 2);
        assert_eq!(s.elements(), vec![0, 129]);
    }

    #[test]
    fn subset_and_intersection() {
        let a = SubgroupSet::from_elements(10, &[0, 2, 4]);
        let b = SubgroupSet::from_elements(10, &[0, 2, 4, 6]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        let c = SubgroupSet::from_elements(10, &[2, 6, 9]);
        assert_eq!(a.intersection(&c).elements(), vec![2]);
    }

    #[test]
    fn equality_is_by_content() {
        let a = SubgroupSet::from_elements(10, &[3, 1]);
        let b = SubgroupSet::from_elements(10, &[1, 3]);
        assert_eq!(a, b);
        assert_eq!(a.sort_key(), (2, vec![1, 3]));
    }
}
