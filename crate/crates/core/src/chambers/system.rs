use std::collections::{HashMap, VecDeque};

use crate::coxeter::{GenSet, Word};
use crate::error::{Error, Result};

/// A set of chambers with one partition into panels per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberSystem {
    chambers: Vec<String>,
    generators: Vec<String>,
    /// `panels[s]` partitions the chambers; each panel is sorted.
    panels: Vec<Vec<Vec<usize>>>,
    /// `panel_of[s][c]` indexes into `panels[s]`.
    panel_of: Vec<Vec<usize>>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidChamberSystem(msg.into())
}

impl ChamberSystem {
    /// `panels[s]` must partition `0..chambers.len()`.
    pub fn new(
        chambers: Vec<String>,
        generators: Vec<String>,
        panels: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = chambers.len();
        if n == 0 {
            return Err(bad("no chambers"));
        }
        let mut index = HashMap::new();
        for (i, c) in chambers.iter().enumerate() {
            if index.insert(c.as_str(), i).is_some() {
                return Err(bad(format!("duplicate chamber {c:?}")));
            }
        }
        if panels.len() != generators.len() {
            return Err(bad(format!(
                "{} generators but {} panel partitions",
                generators.len(),
                panels.len()
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(bad(format!("duplicate generator {g:?}")));
            }
        }
        let mut panel_of = Vec::with_capacity(generators.len());
        let mut sorted_panels = Vec::with_capacity(generators.len());
        for (s, partition) in panels.into_iter().enumerate() {
            let mut owner = vec![usize::MAX; n];
            let mut sorted = Vec::with_capacity(partition.len());
            for (p, mut panel) in partition.into_iter().enumerate() {
                if panel.is_empty() {
                    return Err(bad(format!("empty {:?}-panel", generators[s])));
                }
                panel.sort_unstable();
                for &c in &panel {
                    if c >= n {
                        return Err(bad(format!("chamber index {c} out of range")));
                    }
                    if owner[c] != usize::MAX {
                        return Err(bad(format!(
                            "chamber {:?} lies in two {:?}-panels",
                            chambers[c], generators[s]
                        )));
                    }
                    owner[c] = p;
                }
                sorted.push(panel);
            }
            if let Some(c) = owner.iter().position(|&o| o == usize::MAX) {
                return Err(bad(format!(
                    "chamber {:?} lies in no {:?}-panel",
                    chambers[c], generators[s]
                )));
            }
            panel_of.push(owner);
            sorted_panels.push(sorted);
        }
        Ok(Self {
            chambers,
            generators,
            panels: sorted_panels,
            panel_of,
        })
    }

    /// Same as [`ChamberSystem::new`] with panels given by chamber label.
    pub fn from_labels<S: AsRef<str>>(
        chambers: Vec<String>,
        generators: Vec<String>,
        panels: &[Vec<Vec<S>>],
    ) -> Result<Self> {
        let index: HashMap<&str, usize> =
            chambers.iter().enumerate().map(|(i, c)| (c.as_str(), i)).collect();
        let mut resolved = Vec::with_capacity(panels.len());
        for partition in panels {
            let mut ps = Vec::with_capacity(partition.len());
            for panel in partition {
                let mut ids = Vec::with_capacity(panel.len());
                for c in panel {
                    let c = c.as_ref();
                    ids.push(*index.get(c).ok_or_else(|| bad(format!("unknown chamber {c:?}")))?);
                }
                ps.push(ids);
            }
            resolved.push(ps);
        }
        Self::new(chambers, generators, resolved)
    }

    pub fn num_chambers(&self) -> usize {
        self.chambers.len()
    }

    pub fn chambers(&self) -> &[String] {
        &self.chambers
    }

    pub fn label(&self, c: usize) -> &str {
        &self.chambers[c]
    }

    pub fn labels(&self, cs: &[usize]) -> Vec<String> {
        cs.iter().map(|&c| self.chambers[c].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.chambers.iter().position(|c| c == label)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn panels(&self, s: usize) -> &[Vec<usize>] {
        &self.panels[s]
    }

    /// The `s`-panel containing `c`.
    pub fn panel(&self, s: usize, c: usize) -> &[usize] {
        &self.panels[s][self.panel_of[s][c]]
    }

    pub fn panel_index(&self, s: usize, c: usize) -> usize {
        self.panel_of[s][c]
    }

    pub fn adjacent(&self, s: usize, c: usize, d: usize) -> bool {
        c != d && self.panel_of[s][c] == self.panel_of[s][d]
    }

    /// Chambers `s`-adjacent to `c`, excluding `c`.
    pub fn neighbours(&self, s: usize, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.panel(s, c).iter().copied().filter(move |&d| d != c)
    }

    /// Sizes of all panels, per generator, sorted and deduplicated.
    pub fn thickness(&self) -> Vec<Vec<usize>> {
        self.panels
            .iter()
            .map(|ps| {
                let mut sizes: Vec<usize> = ps.iter().map(Vec::len).collect();
                sizes.sort_unstable();
                sizes.dedup();
                sizes
            })
            .collect()
    }

    /// The `T`-residue of `c`: chambers reachable by `T`-galleries, sorted.
    pub fn residue(&self, c: usize, t: GenSet) -> Vec<usize> {
        let mut seen = vec![false; self.num_chambers()];
        seen[c] = true;
        let mut stack = vec![c];
        let mut out = vec![c];
        while let Some(x) = stack.pop() {
            for s in t.iter() {
                for &y in self.panel(s, x) {
                    if !seen[y] {
                        seen[y] = true;
                        out.push(y);
                        stack.push(y);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `ids[c]` numbers the `T`-residues; residues appear in order of their
    /// least chamber.
    pub fn residue_ids(&self, t: GenSet) -> (Vec<usize>, usize) {
        let n = self.num_chambers();
        let mut ids = vec![usize::MAX; n];
        let mut count = 0;
        for c in 0..n {
            if ids[c] != usize::MAX {
                continue;
            }
            for d in self.residue(c, t) {
                ids[d] = count;
            }
            count += 1;
        }
        (ids, count)
    }

    pub fn is_connected(&self) -> bool {
        self.residue(0, GenSet::full(self.rank())).len() == self.num_chambers()
    }

    /// Breadth-first search from `c`: for every chamber, the type of one
    /// minimal gallery from `c`, or `None` if unreachable.
    pub fn minimal_gallery_types(&self, c: usize) -> Vec<Option<Word>> {
        let mut types: Vec<Option<Word>> = vec![None; self.num_chambers()];
        types[c] = Some(Word::identity());
        let mut queue = VecDeque::from([c]);
        while let Some(x) = queue.pop_front() {
            let wx = types[x].clone().expect("queued chambers are reached");
            for s in 0..self.rank() {
                for y in self.neighbours(s, x) {
                    if types[y].is_none() {
                        types[y] = Some(wx.appended(s));
                        queue.push_back(y);
                    }
                }
            }
        }
        types
    }

    /// Whether `chambers` is a gallery of the given type.
    pub fn is_gallery(&self, chambers: &[usize], ty: &Word) -> bool {
        chambers.len() == ty.len() + 1
            && chambers
                .windows(2)
                .zip(ty.iter())
                .all(|(p, s)| self.adjacent(s, p[0], p[1]))
    }

    /// Endpoints of all galleries of type `ty` starting at `c`, sorted.
    pub fn gallery_endpoints(&self, c: usize, ty: &Word) -> Vec<usize> {
        let mut current = vec![c];
        for s in ty.iter() {
            let mut next: Vec<usize> = current.iter().flat_map(|&x| self.neighbours(s, x)).collect();
            next.sort_unstable();
            next.dedup();
            current = next;
        }
        current
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("c{i}")).collect()
    }

    fn square() -> ChamberSystem {
        // thin A1 x A1: c0 -s- c1, c2 -s- c3, c0 -t- c2, c1 -t- c3
        ChamberSystem::new(
            names(4),
            vec!["s".into(), "t".into()],
            vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_non_partitions() {
        let g = vec!["s".to_string()];
        assert!(ChamberSystem::new(names(3), g.clone(), vec![vec![vec![0, 1]]]).is_err());
        assert!(ChamberSystem::new(names(2), g.clone(), vec![vec![vec![0, 1], vec![1]]]).is_err());
        assert!(ChamberSystem::new(names(2), g.clone(), vec![vec![vec![0, 2], vec![1]]]).is_err());
        assert!(ChamberSystem::new(names(2), g, vec![vec![vec![0, 1]]]).is_ok());
    }

    #[test]
    fn residues_and_galleries() {
        let cs = square();
        assert_eq!(cs.residue(0, GenSet::empty()), vec![0]);
        assert_eq!(cs.residue(0, GenSet::singleton(0)), vec![0, 1]);
        assert_eq!(cs.residue(3, GenSet::full(2)), vec![0, 1, 2, 3]);
        assert_eq!(cs.residue_ids(GenSet::singleton(1)), (vec![0, 1, 0, 1], 2));
        assert!(cs.is_connected());
        assert!(cs.is_gallery(&[0, 1, 3], &Word::from(vec![0, 1])));
        assert!(!cs.is_gallery(&[0, 1, 3], &Word::from(vec![1, 0])));
        assert_eq!(cs.gallery_endpoints(0, &Word::from(vec![0, 1])), vec![3]);
        let types = cs.minimal_gallery_types(0);
        assert_eq!(types[3].as_ref().map(Word::len), Some(2));
    }
}
