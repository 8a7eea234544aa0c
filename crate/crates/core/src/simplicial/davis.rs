use crate::coxeter::{subset_label, SphericalPoset};

use super::{Poset, SimplicialComplex};

/// A simplicial complex with a family of mirrors indexed by generators.
///
/// Each mirror is the full subcomplex on `mirror_vertices(s)`.
#[derive(Clone, Debug)]
pub struct MirroredComplex {
    complex: SimplicialComplex,
    generators: Vec<String>,
    mirrors: Vec<Vec<usize>>,
}

impl MirroredComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn mirror_vertices(&self, s: usize) -> &[usize] {
        &self.mirrors[s]
    }

    pub fn mirror(&self, s: usize) -> SimplicialComplex {
        self.complex.full_subcomplex(&self.mirrors[s])
    }

    /// `X_T`, the intersection of the mirrors in `t`. `X_∅ = X`.
    pub fn mirror_intersection(&self, t: &[usize]) -> SimplicialComplex {
        let keep: Vec<usize> = (0..self.complex.num_vertices())
            .filter(|v| t.iter().all(|&s| self.mirrors[s].contains(v)))
            .collect();
        self.complex.full_subcomplex(&keep)
    }
}

/// `K = |P|` for a downward-closed family `P` of generator subsets containing
/// `∅`, with mirrors `K_s = |P_{>= {s}}|`.
fn chamber_from_family(generators: &[String], family: Vec<Vec<usize>>) -> MirroredComplex {
    let labels = family
        .iter()
        .map(|f| {
            let inner: Vec<&str> = f.iter().map(|&s| generators[s].as_str()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let poset = Poset::from_fn(labels, |a, b| {
        family[a].len() < family[b].len() && family[a].iter().all(|s| family[b].contains(s))
    })
    .expect("inclusion is a strict order");
    let complex = poset.order_complex();
    let mirrors = (0..generators.len())
        .map(|s| (0..family.len()).filter(|&v| family[v].contains(&s)).collect())
        .collect();
    MirroredComplex {
        complex,
        generators: generators.to_vec(),
        mirrors,
    }
}

/// The Davis chamber of a Coxeter system.
pub fn davis_chamber(poset: &SphericalPoset) -> MirroredComplex {
    let family = poset.subsets().iter().map(|t| t.iter().collect()).collect();
    // labels come from subset_label; keep them identical
    let chamber = chamber_from_family(poset.generators(), family);
    debug_assert!(poset
        .subsets()
        .iter()
        .zip(chamber.complex.vertices())
        .all(|(&t, l)| subset_label(poset.generators(), t) == *l));
    chamber
}

/// `K(L) = |S(L)|`, where `S(L)` is the face poset of `L` including `∅`.
pub fn davis_chamber_of(complex: &SimplicialComplex) -> MirroredComplex {
    let mut family: Vec<Vec<usize>> = complex.faces().map(<[usize]>::to_vec).collect();
    family.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    chamber_from_family(complex.vertices(), family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterMatrix, Order};
    use crate::simplicial::reduced_homology;

    #[test]
    fn infinite_dihedral_chamber_is_a_path() {
        let k = davis_chamber(&CoxeterMatrix::dihedral(Order::Infinite).spherical_poset());
        assert_eq!(k.complex().f_vector(), vec![3, 2]);
        assert_eq!(k.mirror(0).f_vector(), vec![1]);
        assert_eq!(k.mirror(1).f_vector(), vec![1]);
    }

    #[test]
    fn finite_dihedral_chamber_is_a_square() {
        let k = davis_chamber(&CoxeterMatrix::dihedral(Order::Finite(3)).spherical_poset());
        assert_eq!(k.complex().f_vector(), vec![4, 5, 2]);
        for s in 0..2 {
            let m = k.mirror(s);
            assert_eq!(m.f_vector(), vec![2, 1]);
            assert!(!m.vertices().contains(&"{}".to_string()));
        }
        assert_eq!(k.mirror_intersection(&[0, 1]).f_vector(), vec![1]);
        assert!(reduced_homology(k.complex()).is_acyclic());
    }

    #[test]
    fn chamber_of_square_has_nine_vertices() {
        let c4 = SimplicialComplex::octahedral(1, &["a", "b"]).unwrap();
        let k = davis_chamber_of(&c4);
        assert_eq!(k.complex().num_vertices(), 9);
        assert!(reduced_homology(k.complex()).is_acyclic());
    }
}
