use std::cmp::Ordering;
use std::fmt;

/// Largest element count a [`LabelSet`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// A set of poset elements, stored as a bitmask over 0-based indices.
///
/// Displayed with the 1-based labels used in poset files, e.g. `{1,3}`.
/// The total order is lexicographic on the sorted label sequence, so
/// `{} < {1} < {1,2} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        LabelSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}` in index terms.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            LabelSet(u64::MAX)
        } else {
            LabelSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            debug_assert!(i < MAX_ELEMENTS);
            bits |= 1 << i;
        }
        LabelSet(bits)
    }

    /// Builds a set from 1-based labels. Panics on label 0.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_indices(labels.into_iter().map(|l| {
            assert!(l >= 1, "labels are 1-based");
            l - 1
        }))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn with(self, i: usize) -> Self {
        LabelSet(self.0 | 1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        LabelSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        LabelSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{0..n}`.
    pub fn complement(self, n: usize) -> Self {
        LabelSet::full(n).difference(self)
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// 1-based labels in increasing order.
    pub fn labels(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

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

impl ExactSizeIterator for Indices {}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // First position where the sorted sequences disagree.
        let k = diff.trailing_zeros();
        let above = if k == 63 { 0 } else { u64::MAX << (k + 1) };
        if self.0 >> k & 1 == 1 {
            // `self` continues with k; `other` continues with something larger or stops.
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.indices().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A duplicate-free family of label sets in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SubsetList(Vec<LabelSet>);

impl SubsetList {
    pub fn new(mut members: Vec<LabelSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        SubsetList(members)
    }

    pub fn as_slice(&self) -> &[LabelSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, set: LabelSet) -> bool {
        self.0.binary_search(&set).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabelSet> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<LabelSet> {
        self.0
    }
}

impl<'a> IntoIterator for &'a SubsetList {
    type Item = &'a LabelSet;
    type IntoIter = std::slice::Iter<'a, LabelSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<LabelSet> for SubsetList {
    fn from_iter<T: IntoIterator<Item = LabelSet>>(iter: T) -> Self {
        SubsetList::new(iter.into_iter().collect())
    }
}
