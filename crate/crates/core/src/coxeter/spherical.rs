use std::collections::BTreeSet;

use crate::simplicial::SimplicialComplex;

use super::{CoxeterMatrix, GenSet};

/// All spherical subsets of the generating set, ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalPoset {
    generators: Vec<String>,
    subsets: Vec<GenSet>,
}

impl SphericalPoset {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Members sorted by cardinality, then by bitmask. `∅` comes first.
    pub fn subsets(&self) -> &[GenSet] {
        &self.subsets
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn contains(&self, t: GenSet) -> bool {
        self.subsets.binary_search_by(|x| sort_key(*x).cmp(&sort_key(t))).is_ok()
    }

    pub fn label(&self, t: GenSet) -> String {
        subset_label(&self.generators, t)
    }

    /// Maximal elements.
    pub fn maximal(&self) -> Vec<GenSet> {
        self.subsets
            .iter()
            .copied()
            .filter(|&t| !self.subsets.iter().any(|&u| u != t && t.is_subset(u)))
            .collect()
    }
}

fn sort_key(t: GenSet) -> (usize, u64) {
    (t.len(), t.bits())
}

/// `{s,t}` style label for a subset.
pub fn subset_label(generators: &[String], t: GenSet) -> String {
    let inner: Vec<&str> = t.iter().map(|s| generators[s].as_str()).collect();
    format!("{{{}}}", inner.join(","))
}

impl CoxeterMatrix {
    /// The poset of spherical subsets, built level by level: a set is only
    /// tested when all of its maximal proper subsets are already spherical.
    pub fn spherical_poset(&self) -> SphericalPoset {
        let mut all = vec![GenSet::empty()];
        let mut level: BTreeSet<(usize, u64)> = BTreeSet::new();
        level.insert(sort_key(GenSet::empty()));
        while !level.is_empty() {
            let mut candidates = BTreeSet::new();
            for &(_, bits) in &level {
                let t = GenSet::from_bits(bits);
                for s in 0..self.rank() {
                    if !t.contains(s) {
                        candidates.insert(sort_key(t.with(s)));
                    }
                }
            }
            let mut next = BTreeSet::new();
            for (_, bits) in candidates {
                let t = GenSet::from_bits(bits);
                let faces_ok = t.iter().all(|s| level.contains(&sort_key(t.without(s))));
                if faces_ok && self.is_spherical(t) {
                    next.insert(sort_key(t));
                }
            }
            all.extend(next.iter().map(|&(_, b)| GenSet::from_bits(b)));
            level = next;
        }
        SphericalPoset {
            generators: self.generators().to_vec(),
            subsets: all,
        }
    }

    /// The nerve: vertex set `S`, simplices the nonempty spherical subsets.
    pub fn nerve(&self) -> SimplicialComplex {
        let poset = self.spherical_poset();
        let faces = poset
            .maximal()
            .into_iter()
            .map(|t| t.iter().collect::<Vec<_>>());
        SimplicialComplex::from_facets(self.generators().to_vec(), faces)
            .expect("nerve facets use valid vertex indices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Order;

    #[test]
    fn poset_examples() {
        let dinf = CoxeterMatrix::dihedral(Order::Infinite);
        let p = dinf.spherical_poset();
        assert_eq!(p.len(), 3);
        assert!(!p.contains(dinf.all()));

        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert_eq!(i23.spherical_poset().len(), 4);
    }

    #[test]
    fn nerve_examples() {
        let dinf = CoxeterMatrix::dihedral(Order::Infinite);
        let n = dinf.nerve();
        assert_eq!(n.f_vector(), vec![2]);

        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        assert_eq!(i23.nerve().f_vector(), vec![2, 1]);

        let square = CoxeterMatrix::right_angled(["a", "b", "c", "d"], &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap();
        let n = square.nerve();
        assert_eq!(n.f_vector(), vec![4, 4]);
        assert!(n.contains_labels(&["a", "b"]));
        assert!(!n.contains_labels(&["a", "c"]));
    }

    #[test]
    fn labels() {
        let i23 = CoxeterMatrix::dihedral(Order::Finite(3));
        let p = i23.spherical_poset();
        assert_eq!(p.label(GenSet::empty()), "{}");
        assert_eq!(p.label(i23.all()), "{s,t}");
    }
}
