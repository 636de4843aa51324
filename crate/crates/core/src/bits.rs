//! Single-word bitmask sets.
//!
//! [`ElemSet`] holds subsets of a ground set (at most 64 elements) and
//! [`IndexSet`] holds subsets of `[r]` (at most 32 indices). Both are plain
//! `Copy` values; all set algebra is exact word arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

macro_rules! bitset {
    ($(#[$meta:meta])* $name:ident, $word:ty, $ones:ident, $subsets:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub $word);

        impl $name {
            pub const CAPACITY: usize = <$word>::BITS as usize;
            pub const EMPTY: Self = Self(0);

            /// The set `{0, 1, ..., n-1}`.
            pub fn full(n: usize) -> Self {
                assert!(n <= Self::CAPACITY, "{} exceeds capacity {}", n, Self::CAPACITY);
                if n == Self::CAPACITY {
                    Self(<$word>::MAX)
                } else {
                    Self(((1 as $word) << n) - 1)
                }
            }

            pub fn singleton(i: usize) -> Self {
                assert!(i < Self::CAPACITY);
                Self((1 as $word) << i)
            }

            #[inline]
            pub fn bits(self) -> $word {
                self.0
            }

            #[inline]
            pub fn contains(self, i: usize) -> bool {
                i < Self::CAPACITY && self.0 >> i & 1 == 1
            }

            #[inline]
            pub fn insert(&mut self, i: usize) {
                self.0 |= (1 as $word) << i;
            }

            #[inline]
            pub fn remove(&mut self, i: usize) {
                self.0 &= !((1 as $word) << i);
            }

            #[inline]
            pub fn with(mut self, i: usize) -> Self {
                self.insert(i);
                self
            }

            #[inline]
            pub fn without(mut self, i: usize) -> Self {
                self.remove(i);
                self
            }

            #[inline]
            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            #[inline]
            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            #[inline]
            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            #[inline]
            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            #[inline]
            pub fn is_proper_subset(self, other: Self) -> bool {
                self.is_subset(other) && self != other
            }

            #[inline]
            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            #[inline]
            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            #[inline]
            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn min_element(self) -> Option<usize> {
                (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
            }

            pub fn max_element(self) -> Option<usize> {
                (self.0 != 0).then(|| (<$word>::BITS - 1 - self.0.leading_zeros()) as usize)
            }

            /// Members in ascending order.
            pub fn iter(self) -> $ones {
                $ones(self.0)
            }

            /// Every subset of `self`, in ascending numeric order, starting
            /// with the empty set and ending with `self`.
            pub fn subsets(self) -> $subsets {
                $subsets { mask: self.0, next: Some(0) }
            }

            /// Orders by cardinality, then lexicographically on the ascending
            /// member lists. This is the order used in serialized families.
            pub fn canonical_cmp(&self, other: &Self) -> Ordering {
                self.len()
                    .cmp(&other.len())
                    .then_with(|| self.iter().cmp(other.iter()))
            }
        }

        impl BitOr for $name {
            type Output = Self;
            fn bitor(self, rhs: Self) -> Self {
                self.union(rhs)
            }
        }

        impl BitOrAssign for $name {
            fn bitor_assign(&mut self, rhs: Self) {
                self.0 |= rhs.0;
            }
        }

        impl BitAnd for $name {
            type Output = Self;
            fn bitand(self, rhs: Self) -> Self {
                self.intersection(rhs)
            }
        }

        impl BitAndAssign for $name {
            fn bitand_assign(&mut self, rhs: Self) {
                self.0 &= rhs.0;
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                self.difference(rhs)
            }
        }

        impl FromIterator<usize> for $name {
            fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
                let mut set = Self::EMPTY;
                for i in iter {
                    set.insert(i);
                }
                set
            }
        }

        impl IntoIterator for $name {
            type Item = usize;
            type IntoIter = $ones;
            fn into_iter(self) -> $ones {
                self.iter()
            }
        }

        #[derive(Clone, Debug)]
        pub struct $ones($word);

        impl Iterator for $ones {
            type Item = usize;

            #[inline]
            fn next(&mut self) -> Option<usize> {
                if self.0 == 0 {
                    return None;
                }
                let i = self.0.trailing_zeros() as usize;
                self.0 &= self.0 - 1;
                Some(i)
            }

            fn size_hint(&self) -> (usize, Option<usize>) {
                let n = self.0.count_ones() as usize;
                (n, Some(n))
            }
        }

        impl ExactSizeIterator for $ones {}

        #[derive(Clone, Debug)]
        pub struct $subsets {
            mask: $word,
            next: Option<$word>,
        }

        impl Iterator for $subsets {
            type Item = $name;

            fn next(&mut self) -> Option<$name> {
                let cur = self.next?;
                self.next = if cur == self.mask {
                    None
                } else {
                    Some(cur.wrapping_sub(self.mask) & self.mask)
                };
                Some($name(cur))
            }
        }
    };
}

bitset!(
    /// A subset of a ground set, as a bitmask over element indices.
    ElemSet, u64, ElemIter, ElemSubsets
);

bitset!(
    /// A subset of `[r]`, as a bitmask over 0-based set indices.
    IndexSet, u32, IndexIter, IndexSubsets
);

impl IndexSet {
    /// Builds a set from 1-based indices.
    pub fn from_one_based<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().map(|i| i - 1).collect()
    }

    /// Members as 1-based indices, ascending.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

/// Prints 1-based, e.g. `{1,3,4}`; the empty set prints as `{}`.
impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_singletons() {
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(IndexSet::full(32).len(), 32);
        assert_eq!(IndexSet::full(3).to_one_based(), vec![1, 2, 3]);
        assert!(IndexSet::singleton(4).contains(4));
        assert!(!IndexSet::singleton(4).contains(40));
    }

    #[test]
    fn subsets_enumerates_all_submasks_in_order() {
        let mask = IndexSet::from_one_based([1, 3, 4]);
        let subs: Vec<_> = mask.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(subs.iter().all(|s| s.is_subset(mask)));
        assert_eq!(IndexSet::EMPTY.subsets().count(), 1);
        assert_eq!(IndexSet::full(32).subsets().take(3).count(), 3);
    }

    #[test]
    fn canonical_order_is_size_then_lexicographic() {
        let mut v = [
            IndexSet::from_one_based([2, 3]),
            IndexSet::from_one_based([1, 4]),
            IndexSet::from_one_based([3]),
            IndexSet::EMPTY,
            IndexSet::from_one_based([1, 2, 3]),
        ];
        v.sort_by(IndexSet::canonical_cmp);
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{3}", "{1,4}", "{2,3}", "{1,2,3}"]);
    }

    proptest! {
        #[test]
        fn algebra_matches_iterated_membership(a: u64, b: u64) {
            let (x, y) = (ElemSet(a), ElemSet(b));
            for i in 0..64 {
                prop_assert_eq!((x | y).contains(i), x.contains(i) || y.contains(i));
                prop_assert_eq!((x & y).contains(i), x.contains(i) && y.contains(i));
                prop_assert_eq!((x - y).contains(i), x.contains(i) && !y.contains(i));
            }
            prop_assert_eq!(x.iter().count(), x.len());
            prop_assert_eq!(x.iter().collect::<ElemSet>(), x);
            prop_assert_eq!((x & y).is_subset(x), true);
        }
    }
}
