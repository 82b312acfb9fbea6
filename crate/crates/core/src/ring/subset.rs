use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::Elem;

/// A set of element indices of one ring.
///
/// Used for ideals, annihilators, radicals and any other carrier subset.
/// Ordering compares the membership vectors as binary numbers with the
/// highest index most significant, so sorting a list of ideals is stable
/// across runs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    bits: FixedBitSet,
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        Subset {
            bits: FixedBitSet::with_capacity(order),
        }
    }

    pub fn full(order: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(order);
        bits.insert_range(..);
        Subset { bits }
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(order: usize, elems: I) -> Self {
        let mut s = Subset::empty(order);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Universe size (the ring order), not the number of members.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e.index())
    }

    /// Returns true if the element was newly inserted.
    #[inline]
    pub fn insert(&mut self, e: Elem) -> bool {
        !self.bits.put(e.index())
    }

    pub fn remove(&mut self, e: Elem) {
        self.bits.set(e.index(), false);
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones().map(Elem::new)
    }

    pub fn first(&self) -> Option<Elem> {
        self.bits.minimum().map(Elem::new)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &Subset) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.bits.difference_with(&other.bits);
        s
    }

    /// True if the two sets share an element other than `skip`.
    pub fn meets_outside(&self, other: &Subset, skip: Elem) -> bool {
        self.bits
            .as_slice()
            .iter()
            .zip(other.bits.as_slice())
            .enumerate()
            .any(|(w, (a, b))| {
                let mut m = a & b;
                let base = w * usize::BITS as usize;
                let s = skip.index();
                if s >= base && s < base + usize::BITS as usize {
                    m &= !(1usize << (s - base));
                }
                m != 0
            })
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.bits.as_slice();
        let b = other.bits.as_slice();
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_numeric() {
        let a = Subset::from_elems(70, [Elem::new(0), Elem::new(1)]);
        let b = Subset::from_elems(70, [Elem::new(65)]);
        let c = Subset::from_elems(70, [Elem::new(2)]);
        assert!(a < c);
        assert!(c < b);
    }

    #[test]
    fn meets_outside_ignores_skip() {
        let a = Subset::from_elems(8, [Elem::new(0), Elem::new(3)]);
        let b = Subset::from_elems(8, [Elem::new(0), Elem::new(5)]);
        assert!(!a.meets_outside(&b, Elem::new(0)));
        let c = Subset::from_elems(8, [Elem::new(0), Elem::new(3)]);
        assert!(a.meets_outside(&c, Elem::new(0)));
    }

    #[test]
    fn insert_reports_novelty() {
        let mut s = Subset::empty(4);
        assert!(s.insert(Elem::new(2)));
        assert!(!s.insert(Elem::new(2)));
        assert_eq!(s.len(), 1);
    }
}
