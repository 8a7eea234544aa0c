//! Oracles that do not touch the rewriting code: finite Coxeter groups as
//! permutation groups, and a brute-force closure of their elements.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use coxcover::coxeter::{CoxeterMatrix, Order, Word};

pub type Perm = Vec<usize>;

/// A finite Coxeter group with a faithful permutation representation.
pub struct PermGroup {
    pub name: &'static str,
    pub matrix: CoxeterMatrix,
    pub gens: Vec<Perm>,
    pub order: usize,
}

fn transposition(n: usize, a: usize, b: usize) -> Perm {
    let mut p: Perm = (0..n).collect();
    p.swap(a, b);
    p
}

/// `p` then `q`, acting on the right.
pub fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

impl PermGroup {
    pub fn eval(&self, w: &Word) -> Perm {
        let n = self.gens[0].len();
        w.iter().fold((0..n).collect(), |acc, s| compose(&acc, &self.gens[s]))
    }

    /// All group elements by breadth-first closure.
    pub fn closure(&self) -> BTreeSet<Perm> {
        let n = self.gens[0].len();
        let id: Perm = (0..n).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.gens {
                let q = compose(&p, g);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        seen
    }
}

pub fn finite_fixtures() -> Vec<PermGroup> {
    vec![
        PermGroup {
            name: "A1xA1",
            matrix: CoxeterMatrix::dihedral(Order::Finite(2)),
            gens: vec![transposition(4, 0, 1), transposition(4, 2, 3)],
            order: 4,
        },
        PermGroup {
            name: "I2(3)",
            matrix: CoxeterMatrix::dihedral(Order::Finite(3)),
            gens: vec![transposition(3, 0, 1), transposition(3, 1, 2)],
            order: 6,
        },
        PermGroup {
            // symmetries of a square with vertices 0..4 in cyclic order
            name: "I2(4)",
            matrix: CoxeterMatrix::dihedral(Order::Finite(4)),
            gens: vec![transposition(4, 1, 3), vec![1, 0, 3, 2]],
            order: 8,
        },
        PermGroup {
            name: "A3",
            matrix: CoxeterMatrix::type_a(3),
            gens: vec![transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)],
            order: 24,
        },
    ]
}

/// Every word over `rank` letters of length at most `max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Word::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for s in 0..rank {
                next.push(w.appended(s));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Word length by breadth-first search in the Cayley graph.
pub fn cayley_length(g: &PermGroup, target: &Perm) -> usize {
    let n = g.gens[0].len();
    let id: Perm = (0..n).collect();
    let mut dist = std::collections::BTreeMap::from([(id.clone(), 0usize)]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        if &p == target {
            return dist[&p];
        }
        for s in &g.gens {
            let q = compose(&p, s);
            if !dist.contains_key(&q) {
                dist.insert(q.clone(), dist[&p] + 1);
                queue.push_back(q);
            }
        }
    }
    unreachable!("target is not in the group")
}
