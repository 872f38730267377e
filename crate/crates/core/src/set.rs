//! Fixed-universe bit sets over a rack carrier.

use std::fmt;

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for x in 0..universe {
            set.insert(x);
        }
        set
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(universe: usize, elements: I) -> Self {
        let mut set = Self::empty(universe);
        for x in elements {
            set.insert(x);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Inserts `x`, returning `true` if it was not already present.
    ///
    /// Panics if `x` is outside the universe.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let (w, b) = (x / WORD, x % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / WORD] & (1 << (x % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        Self {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Sort key giving the canonical order: size first, then the sorted
    /// element list lexicographically.
    pub fn canonical_key(&self) -> (usize, Vec<usize>) {
        (self.len(), self.to_vec())
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
    use proptest::prelude::*;

    #[test]
    fn spans_multiple_words() {
        let s = ElementSet::from_elements(130, [0, 63, 64, 129]);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(!s.contains(130));
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::btree_set(0usize..100, 0..40),
                            b in proptest::collection::btree_set(0usize..100, 0..40)) {
            let sa = ElementSet::from_elements(100, a.iter().copied());
            let sb = ElementSet::from_elements(100, b.iter().copied());
            prop_assert_eq!(sa.to_vec(), a.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), a.intersection(&b).copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
        }
    }
}
