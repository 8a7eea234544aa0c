use std::fmt;

use crate::error::{Error, Result};

use super::{GenSet, Word};

/// Default number of rewrite steps a single reduction may take.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Order of a product `st`: a positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    /// Decodes the external integer encoding, in which `0` stands for infinity.
    pub fn from_code(code: u32) -> Self {
        if code == 0 {
            Order::Infinite
        } else {
            Order::Finite(code)
        }
    }

    pub fn code(self) -> u32 {
        match self {
            Order::Finite(m) => m,
            Order::Infinite => 0,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// A Coxeter matrix over an ordered, labelled generating set.
///
/// The order of `generators` is significant: canonical reduced words are the
/// lexicographically least reduced expressions with respect to it.
#[derive(Clone, Debug)]
pub struct CoxeterMatrix {
    generators: Vec<String>,
    entries: Vec<Order>,
    budget: u64,
}

impl PartialEq for CoxeterMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.entries == other.entries
    }
}

impl Eq for CoxeterMatrix {}

impl CoxeterMatrix {
    pub fn new(generators: Vec<String>, rows: Vec<Vec<Order>>) -> Result<Self> {
        let n = generators.len();
        if n > GenSet::CAPACITY {
            return Err(Error::InvalidMatrix(format!(
                "at most {} generators are supported, got {n}",
                GenSet::CAPACITY
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.is_empty() {
                return Err(Error::InvalidMatrix("empty generator label".into()));
            }
            if generators[..i].contains(g) {
                return Err(Error::InvalidMatrix(format!("duplicate generator {g:?}")));
            }
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!("matrix must be {n}x{n}")));
        }
        for i in 0..n {
            if rows[i][i] != Order::Finite(1) {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry for {} must be 1",
                    generators[i]
                )));
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::InvalidMatrix(format!(
                        "matrix is not symmetric at ({}, {})",
                        generators[i], generators[j]
                    )));
                }
                if i != j {
                    if let Order::Finite(m) = rows[i][j] {
                        if m < 2 {
                            return Err(Error::InvalidMatrix(format!(
                                "off-diagonal entry ({}, {}) must be >= 2 or infinity",
                                generators[i], generators[j]
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self {
            generators,
            entries: rows.into_iter().flatten().collect(),
            budget: DEFAULT_STEP_BUDGET,
        })
    }

    /// Builds a matrix from integer rows where `0` encodes infinity.
    pub fn from_codes(generators: Vec<String>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Order::from_code).collect())
            .collect();
        Self::new(generators, rows)
    }

    /// Builds a matrix from a function on index pairs `s < t`.
    pub fn from_fn<L: Into<String>>(
        generators: impl IntoIterator<Item = L>,
        mut m: impl FnMut(usize, usize) -> Order,
    ) -> Result<Self> {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        let n = generators.len();
        let mut rows = vec![vec![Order::Finite(1); n]; n];
        for s in 0..n {
            for t in s + 1..n {
                let v = m(s, t);
                rows[s][t] = v;
                rows[t][s] = v;
            }
        }
        Self::new(generators, rows)
    }

    /// The dihedral system on generators `s`, `t` with `m(s,t) = m`.
    pub fn dihedral(m: Order) -> Self {
        Self::from_fn(["s", "t"], |_, _| m).expect("dihedral matrix is valid")
    }

    /// Type `A_n` with generators `s1..sn`.
    pub fn type_a(n: usize) -> Self {
        Self::from_fn((1..=n).map(|i| format!("s{i}")), |s, t| {
            if t == s + 1 {
                Order::Finite(3)
            } else {
                Order::Finite(2)
            }
        })
        .expect("type A matrix is valid")
    }

    /// The right-angled system of a graph: `2` on edges, infinity elsewhere.
    pub fn right_angled<L: Into<String>>(
        generators: impl IntoIterator<Item = L>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        Self::from_fn(generators, |s, t| {
            if edges.contains(&(s, t)) || edges.contains(&(t, s)) {
                Order::Finite(2)
            } else {
                Order::Infinite
            }
        })
    }

    pub fn with_budget(mut self, steps: u64) -> Self {
        self.budget = steps;
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn label(&self, s: usize) -> &str {
        &self.generators[s]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == label)
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    #[inline]
    pub fn m(&self, s: usize, t: usize) -> Order {
        self.entries[s * self.rank() + t]
    }

    pub fn rows(&self) -> Vec<Vec<Order>> {
        self.entries.chunks(self.rank()).map(<[Order]>::to_vec).collect()
    }

    pub fn codes(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.rank())
            .map(|r| r.iter().map(|o| o.code()).collect())
            .collect()
    }

    /// Same entries, new labels.
    pub fn relabeled(&self, generators: Vec<String>) -> Result<Self> {
        if generators.len() != self.rank() {
            return Err(Error::InvalidMatrix("relabeling changes rank".into()));
        }
        Ok(Self::new(generators, self.rows())?.with_budget(self.budget))
    }

    /// The Coxeter matrix of the special subgroup `W_T`, generators in ambient order.
    pub fn restrict(&self, subset: GenSet) -> Self {
        let idx: Vec<usize> = subset.iter().collect();
        let rows = idx
            .iter()
            .map(|&s| idx.iter().map(|&t| self.m(s, t)).collect())
            .collect();
        let labels = idx.iter().map(|&s| self.generators[s].clone()).collect();
        Self::new(labels, rows)
            .expect("restriction of a valid matrix is valid")
            .with_budget(self.budget)
    }

    pub fn parse_word<S: AsRef<str>>(&self, labels: &[S]) -> Result<Word> {
        labels
            .iter()
            .map(|l| {
                let l = l.as_ref();
                self.index_of(l)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown generator {l:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    pub fn word_labels(&self, w: &Word) -> Vec<String> {
        w.iter().map(|s| self.generators[s].clone()).collect()
    }

    /// Letters joined by `.`; the identity prints as `1`.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            self.word_labels(w).join(".")
        }
    }

    pub fn set_labels(&self, t: GenSet) -> Vec<String> {
        t.iter().map(|s| self.generators[s].clone()).collect()
    }

    pub fn parse_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<GenSet> {
        Ok(self.parse_word(labels)?.iter().collect())
    }
}
