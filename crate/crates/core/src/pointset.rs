use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Largest carrier supported by [`PointSet`].
pub const MAX_POINTS: usize = 64;

/// A set of points drawn from `0..MAX_POINTS`, stored as a bitmask.
///
/// The carrier size is not stored; operations that need it (complement,
/// the full set) take it as an argument. The same type is reused for sets
/// of cluster indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        PointSet(1u64 << x)
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub fn with(self, x: usize) -> Self {
        PointSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub fn without(self, x: usize) -> Self {
        PointSet(self.0 & !(1u64 << x))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Image of the set under a point map.
    pub fn map(self, f: &[usize]) -> PointSet {
        self.iter().map(|x| f[x]).collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterator over the members of a [`PointSet`] in increasing order.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over the subsets of a mask (standard `(s - mask) & mask` walk).
#[derive(Clone)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = PointSet;

    fn next(&mut self) -> Option<PointSet> {
        let cur = self.next?;
        let nxt = cur.wrapping_sub(self.mask) & self.mask;
        self.next = if nxt == 0 { None } else { Some(nxt) };
        Some(PointSet(cur))
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for PointSet {
            type Output = PointSet;
            #[inline]
            fn $f(self, rhs: PointSet) -> PointSet {
                PointSet(self.0 $op rhs.0)
            }
        }
        impl $atr for PointSet {
            #[inline]
            fn $af(&mut self, rhs: PointSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

binop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
binop!(BitOr, bitor, BitOrAssign, bitor_assign, |);

impl Sub for PointSet {
    type Output = PointSet;
    #[inline]
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & !rhs.0)
    }
}

impl SubAssign for PointSet {
    #[inline]
    fn sub_assign(&mut self, rhs: PointSet) {
        self.0 &= !rhs.0;
    }
}

/// Complement within the 64-bit universe; use [`PointSet::complement`] when
/// the carrier is smaller.
impl Not for PointSet {
    type Output = PointSet;
    #[inline]
    fn not(self) -> PointSet {
        PointSet(!self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(3).bits(), 0b111);
        assert_eq!(PointSet::full(64).bits(), u64::MAX);
        let s: PointSet = [0, 2].into_iter().collect();
        assert_eq!(s.complement(4), [1, 3].into_iter().collect());
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s: PointSet = [1, 3, 4].into_iter().collect();
        let subs: Vec<PointSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(subs[0], PointSet::EMPTY);
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn display_lists_members() {
        let s: PointSet = [0, 5].into_iter().collect();
        assert_eq!(alloc::format!("{s}"), "{0,5}");
    }
}
