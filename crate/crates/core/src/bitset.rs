use std::fmt;

/// A set of element ids below 32, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(u32);

pub const MAX_ELEMENTS: usize = 32;

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u32::MAX)
        } else {
            ElementSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(z: usize) -> Self {
        ElementSet(1 << z)
    }

    pub fn contains(self, z: usize) -> bool {
        z < MAX_ELEMENTS && self.0 >> z & 1 == 1
    }

    pub fn insert(&mut self, z: usize) {
        self.0 |= 1 << z;
    }

    pub fn remove(&mut self, z: usize) {
        self.0 &= !(1 << z);
    }

    pub fn with(self, z: usize) -> Self {
        ElementSet(self.0 | 1 << z)
    }

    pub fn without(self, z: usize) -> Self {
        ElementSet(self.0 & !(1 << z))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
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

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

pub struct Iter(u32);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let z = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(z)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for z in iter {
            s.insert(z);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: ElementSet = [0, 3, 5].into_iter().collect();
        let b: ElementSet = [3, 4].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(4));
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert!(ElementSet::singleton(3).is_subset(a));
        assert_eq!(ElementSet::full(4).bits(), 0b1111);
        assert_eq!(ElementSet::full(32).len(), 32);
        assert_eq!(a.first(), Some(0));
        assert_eq!(ElementSet::EMPTY.first(), None);
    }
}
