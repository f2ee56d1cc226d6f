use std::cmp::Ordering;
use std::fmt;

/// A subset of `{1, ..., n}` identifying a tiling vertex; its size is the
/// vertex dimension.
///
/// Ordered lexicographically by ascending member lists, which is the order
/// used for canonical tile sorting in serialized output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u64);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        let mut bits = 0u64;
        for l in labels {
            debug_assert!((1..=64).contains(&l));
            bits |= 1 << (l - 1);
        }
        LabelSet(bits)
    }

    /// `{1, ..., j}`.
    pub fn prefix(j: usize) -> Self {
        if j >= 64 {
            LabelSet(u64::MAX)
        } else {
            LabelSet((1u64 << j) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        LabelSet(1 << (label - 1))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=64).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    pub fn with(self, label: usize) -> Self {
        LabelSet(self.0 | (1 << (label - 1)))
    }

    pub fn without(self, label: usize) -> Self {
        LabelSet(self.0 & !(1 << (label - 1)))
    }

    pub fn union(self, other: LabelSet) -> Self {
        LabelSet(self.0 | other.0)
    }

    pub fn difference(self, other: LabelSet) -> Self {
        LabelSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let t = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(t + 1)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        LabelSet::from_labels(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = LabelSet::from_labels([1, 2]);
        let b = LabelSet::from_labels([1, 3]);
        let c = LabelSet::from_labels([2]);
        assert!(LabelSet::EMPTY < a);
        assert!(a < b && b < c);
        assert!(LabelSet::from_labels([1]) < a);
    }

    #[test]
    fn basic_ops() {
        let s = LabelSet::from_labels([7, 4, 5, 6, 3, 1]);
        assert_eq!(s.to_vec(), vec![1, 3, 4, 5, 6, 7]);
        assert_eq!(s.len(), 6);
        assert_eq!(s.max(), Some(7));
        assert_eq!(LabelSet::prefix(3), LabelSet::from_labels([1, 2, 3]));
        assert_eq!(LabelSet::prefix(64).len(), 64);
        assert!(s.contains(4) && !s.contains(2) && !s.contains(0));
        assert_eq!(s.without(4).with(2).to_vec(), vec![1, 2, 3, 5, 6, 7]);
    }
}
