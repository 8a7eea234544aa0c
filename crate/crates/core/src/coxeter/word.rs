use std::fmt;

use crate::error::{invalid, Result};

/// A word over the generators, stored as generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn push(&mut self, s: usize) {
        self.0.push(s);
    }

    /// The inverse word: generators are involutions, so this is the reversal.
    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepended(&self, s: usize) -> Self {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn appended(&self, s: usize) -> Self {
        let mut v = self.0.clone();
        v.push(s);
        Word(v)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The alternating word `(s, t, s, ...)` of length `m`.
pub fn prod_word(s: usize, t: usize, m: usize) -> Result<Word> {
    if m < 1 {
        return Err(invalid("alternating word length must be at least 1"));
    }
    if s == t {
        return Err(invalid("alternating word needs two distinct generators"));
    }
    Ok((0..m).map(|i| if i % 2 == 0 { s } else { t }).collect())
}

/// A subset of the generating set, as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenSet(u64);

impl GenSet {
    pub const CAPACITY: usize = 64;

    pub const fn empty() -> Self {
        GenSet(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY);
        if n == 64 {
            GenSet(u64::MAX)
        } else {
            GenSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub fn contains(self, s: usize) -> bool {
        s < 64 && self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn with(self, s: usize) -> Self {
        GenSet(self.0 | 1 << s)
    }

    pub fn without(self, s: usize) -> Self {
        GenSet(self.0 & !(1 << s))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(s)
            }
        })
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = GenSet> {
        // standard submask enumeration, ascending
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GenSet(cur))
        })
    }
}

impl FromIterator<usize> for GenSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut g = GenSet::empty();
        for s in iter {
            g.insert(s);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prod_word_examples() {
        assert_eq!(prod_word(0, 1, 3).unwrap().letters(), &[0, 1, 0]);
        assert_eq!(prod_word(0, 1, 1).unwrap().letters(), &[0]);
        assert_eq!(prod_word(0, 1, 4).unwrap().letters(), &[0, 1, 0, 1]);
        assert!(prod_word(0, 1, 0).is_err());
        assert!(prod_word(0, 0, 2).is_err());
    }

    #[test]
    fn subsets_enumerates_all() {
        let g = GenSet::from_iter([1, 3, 4]);
        let subs: Vec<_> = g.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset(g)));
        assert_eq!(GenSet::empty().subsets().count(), 1);
    }
}
