//! Tits' solution to the word problem: cancellations `ss -> ()` and braid
//! flips `prod(s,t;m) -> prod(t,s;m)`.
//!
//! A word is reduced exactly when nothing in its flip orbit contains a
//! repeated letter, and all reduced expressions of an element form a single
//! flip orbit. Canonical forms are the lexicographically least member of
//! that orbit.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

use super::{CoxeterMatrix, GenSet, Order, Word};

impl CoxeterMatrix {
    /// Calls `visit` with every word obtained from `w` by a single flip.
    pub(crate) fn for_each_flip(&self, w: &[usize], mut visit: impl FnMut(Vec<usize>)) {
        let n = w.len();
        for i in 0..n.saturating_sub(1) {
            let (s, t) = (w[i], w[i + 1]);
            if s == t {
                continue;
            }
            let Order::Finite(m) = self.m(s, t) else {
                continue;
            };
            let m = m as usize;
            if i + m > n {
                continue;
            }
            let alternating = (0..m).all(|k| w[i + k] == if k % 2 == 0 { s } else { t });
            if alternating {
                let mut v = w.to_vec();
                for k in 0..m {
                    v[i + k] = if k % 2 == 0 { t } else { s };
                }
                visit(v);
            }
        }
    }

    fn charge(&self, steps: &mut u64) -> Result<()> {
        *steps += 1;
        if *steps > self.budget() {
            Err(Error::BudgetExhausted {
                what: "rewrite",
                budget: self.budget(),
            })
        } else {
            Ok(())
        }
    }

    /// Reduces `w` to the canonical (lexicographically least) reduced
    /// expression of the same element.
    pub fn reduce(&self, w: &Word) -> Result<Word> {
        let mut steps = 0u64;
        let mut current = free_cancel(w.letters().to_vec());
        'restart: loop {
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let mut queue = VecDeque::new();
            seen.insert(current.clone());
            queue.push_back(current.clone());
            let mut best = current.clone();
            while let Some(x) = queue.pop_front() {
                if x.windows(2).any(|p| p[0] == p[1]) {
                    current = free_cancel(x);
                    continue 'restart;
                }
                if x < best {
                    best = x.clone();
                }
                let mut budget_hit = None;
                self.for_each_flip(&x, |y| {
                    if budget_hit.is_some() {
                        return;
                    }
                    if let Err(e) = self.charge(&mut steps) {
                        budget_hit = Some(e);
                        return;
                    }
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                });
                if let Some(e) = budget_hit {
                    return Err(e);
                }
            }
            return Ok(Word::from(best));
        }
    }

    /// Word length of the element represented by `w`.
    pub fn length(&self, w: &Word) -> Result<usize> {
        Ok(self.reduce(w)?.len())
    }

    pub fn words_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.reduce(u)? == self.reduce(v)?)
    }

    pub fn is_reduced(&self, w: &Word) -> Result<bool> {
        Ok(self.reduce(w)?.len() == w.len())
    }

    /// Canonical form of the product `uv`.
    pub fn multiply(&self, u: &Word, v: &Word) -> Result<Word> {
        self.reduce(&u.concat(v))
    }

    /// Canonical form of `u^{-1} v`.
    pub fn quotient(&self, u: &Word, v: &Word) -> Result<Word> {
        self.reduce(&u.inverse().concat(v))
    }

    /// The full flip orbit of `w` (all words reachable by flips).
    pub fn flip_orbit(&self, w: &Word) -> Result<Vec<Word>> {
        let mut steps = 0u64;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.letters().to_vec());
        queue.push_back(w.letters().to_vec());
        while let Some(x) = queue.pop_front() {
            let mut next = Vec::new();
            self.for_each_flip(&x, |y| next.push(y));
            for y in next {
                self.charge(&mut steps)?;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            order.push(Word::from(x));
        }
        order.sort();
        Ok(order)
    }

    /// Every reduced expression of the element represented by `w`.
    pub fn reduced_expressions(&self, w: &Word) -> Result<Vec<Word>> {
        self.flip_orbit(&self.reduce(w)?)
    }

    /// Enumerates `W_T` as canonical words, shortest first.
    ///
    /// Fails with [`Error::GroupTooLarge`] once more than `cutoff` elements are
    /// found.
    pub fn elements_of(&self, subset: GenSet, cutoff: usize) -> Result<Vec<Word>> {
        let mut seen: HashMap<Word, ()> = HashMap::new();
        let mut out = vec![Word::identity()];
        seen.insert(Word::identity(), ());
        let mut layer = vec![Word::identity()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                for s in subset.iter() {
                    let ws = self.reduce(&w.appended(s))?;
                    if ws.len() == w.len() + 1 && !seen.contains_key(&ws) {
                        seen.insert(ws.clone(), ());
                        next.push(ws);
                        if seen.len() > cutoff {
                            return Err(Error::GroupTooLarge { cutoff });
                        }
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
        }
        Ok(out)
    }

    pub fn elements(&self, cutoff: usize) -> Result<Vec<Word>> {
        self.elements_of(self.all(), cutoff)
    }

    /// Length of the longest element of a finite `W_T`.
    pub fn longest_length(&self, subset: GenSet, cutoff: usize) -> Result<usize> {
        Ok(self
            .elements_of(subset, cutoff)?
            .last()
            .map_or(0, Word::len))
    }
}

/// Deletes adjacent equal pairs until none remain.
fn free_cancel(w: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(w.len());
    for s in w {
        if out.last() == Some(&s) {
            out.pop();
        } else {
            out.push(s);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[usize]) -> Word {
        Word::from(v.to_vec())
    }

    #[test]
    fn reduce_examples() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert_eq!(i23.reduce(&w(&[0, 1, 0, 1])).unwrap(), w(&[1, 0]));
        assert_eq!(i23.reduce(&w(&[0, 0])).unwrap(), Word::identity());
        let dinf = CoxeterMatrix::dihedral(Order::Infinite);
        assert_eq!(dinf.reduce(&w(&[0, 1, 0, 1])).unwrap(), w(&[0, 1, 0, 1]));
    }

    #[test]
    fn equality_examples() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert!(i23.words_equal(&w(&[0, 1, 0]), &w(&[1, 0, 1])).unwrap());
        assert!(!i23.words_equal(&w(&[0]), &w(&[1])).unwrap());
        assert!(i23.words_equal(&w(&[0, 1, 0, 1, 0, 1]), &Word::identity()).unwrap());
    }

    #[test]
    fn reducedness_examples() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert!(i23.is_reduced(&w(&[0, 1, 0])).unwrap());
        assert!(!i23.is_reduced(&w(&[0, 0])).unwrap());
        assert!(i23.is_reduced(&Word::identity()).unwrap());
    }

    #[test]
    fn canonical_form_is_lex_least() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert_eq!(i23.reduce(&w(&[1, 0, 1])).unwrap(), w(&[0, 1, 0]));
        let a3 = CoxeterMatrix::type_a(3);
        // s3 s1 = s1 s3
        assert_eq!(a3.reduce(&w(&[2, 0])).unwrap(), w(&[0, 2]));
    }

    #[test]
    fn enumerates_dihedral_and_a3() {
        let i24 = CoxeterMatrix::dihedral(Order::Finite(4));
        let els = i24.elements(100).unwrap();
        assert_eq!(els.len(), 8);
        assert_eq!(els.last().unwrap().len(), 4);
        assert_eq!(CoxeterMatrix::type_a(3).elements(100).unwrap().len(), 24);
        assert!(matches!(
            CoxeterMatrix::dihedral(Order::Infinite).elements(50),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let a3 = CoxeterMatrix::type_a(3).with_budget(3);
        let long = w(&[0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert!(matches!(
            a3.reduce(&long),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn reduced_expressions_of_longest_a2() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        let exprs = i23.reduced_expressions(&w(&[0, 1, 0])).unwrap();
        assert_eq!(exprs, vec![w(&[0, 1, 0]), w(&[1, 0, 1])]);
    }
}
