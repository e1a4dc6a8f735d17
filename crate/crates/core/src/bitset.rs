use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

/// Upper bound on the number of positive roots a [`RootSet`] can hold.
pub const MAX_ROOTS: usize = 256;

const WORDS: usize = MAX_ROOTS / 64;

/// Fixed-capacity bitset over positive-root indices.
///
/// Ordering is lexicographic on the bit sequence read from index 0 upward,
/// with an absent bit before a present one. The empty set is the minimum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet([u64; WORDS]);

impl RootSet {
    pub const fn new() -> Self {
        RootSet([0; WORDS])
    }

    /// Set containing indices `0..n`.
    pub fn first_n(n: usize) -> Self {
        let mut s = Self::new();
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
        out
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.0[0],
        }
    }
}

pub struct Iter<'a> {
    set: &'a RootSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let t = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + t);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.0[self.word];
        }
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = RootSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for RootSet {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            match a.reverse_bits().cmp(&b.reverse_bits()) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for RootSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for RootSet {
    type Output = RootSet;
    fn bitor(mut self, rhs: RootSet) -> RootSet {
        self |= rhs;
        self
    }
}

impl BitOrAssign for RootSet {
    fn bitor_assign(&mut self, rhs: RootSet) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a |= b;
        }
    }
}

impl BitAnd for RootSet {
    type Output = RootSet;
    fn bitand(mut self, rhs: RootSet) -> RootSet {
        self &= rhs;
        self
    }
}

impl BitAndAssign for RootSet {
    fn bitand_assign(&mut self, rhs: RootSet) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a &= b;
        }
    }
}

impl Not for RootSet {
    type Output = RootSet;
    fn not(mut self) -> RootSet {
        for a in self.0.iter_mut() {
            *a = !*a;
        }
        self
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_remove_iterate() {
        let mut s = RootSet::new();
        for i in [0, 5, 63, 64, 200, 255] {
            s.insert(i);
        }
        assert_eq!(s.len(), 6);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63, 64, 200, 255]);
        s.remove(64);
        assert!(!s.contains(64));
        assert!(s.contains(200));
    }

    #[test]
    fn empty_set_is_minimal() {
        let mut a = RootSet::new();
        a.insert(100);
        assert!(RootSet::new() < a);
    }

    proptest! {
        #[test]
        fn order_is_lexicographic_on_bits(xs in proptest::collection::btree_set(0usize..256, 0..20),
                                          ys in proptest::collection::btree_set(0usize..256, 0..20)) {
            let a: RootSet = xs.iter().copied().collect();
            let b: RootSet = ys.iter().copied().collect();
            let bits = |s: &RootSet| (0..256).map(|i| s.contains(i)).collect::<Vec<_>>();
            prop_assert_eq!(a.cmp(&b), bits(&a).cmp(&bits(&b)));
        }
    }
}
