use super::{reduced_homology, SimplicialComplex};

/// A closed simplex whose complement has homology that is not free or not
/// concentrated in the requested degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuncturedWitness {
    pub simplex: Vec<String>,
    pub offending_degrees: Vec<isize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuncturedReport {
    pub degree: isize,
    pub holds: bool,
    pub simplices_checked: usize,
    pub witnesses: Vec<PuncturedWitness>,
}

/// Checks that for every closed simplex `σ` of `complex`, including the empty
/// simplex, `L - σ` has reduced homology that is free and concentrated in
/// degree `m`.
///
/// `L - σ` is the full subcomplex on the vertices outside `σ`. Free,
/// concentrated homology is equivalent to the cohomological statement for
/// finite complexes.
pub fn punctured_check(complex: &SimplicialComplex, m: isize) -> PuncturedReport {
    let mut witnesses = Vec::new();
    let mut checked = 0;
    for sigma in complex.faces() {
        checked += 1;
        let h = reduced_homology(&complex.without_vertices(sigma));
        let offending: Vec<isize> = h
            .degrees()
            .iter()
            .filter(|d| !d.is_zero() && (d.degree != m || !d.torsion.is_empty()))
            .map(|d| d.degree)
            .collect();
        if !offending.is_empty() {
            witnesses.push(PuncturedWitness {
                simplex: complex.face_labels(sigma),
                offending_degrees: offending,
            });
        }
    }
    PuncturedReport {
        degree: m,
        holds: witnesses.is_empty(),
        simplices_checked: checked,
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_is_ph1() {
        let c4 = SimplicialComplex::cycle(["a", "b", "c", "d"]);
        let r = punctured_check(&c4, 1);
        assert!(r.holds, "{r:?}");
        // ∅, 4 vertices, 4 edges
        assert_eq!(r.simplices_checked, 9);
    }

    #[test]
    fn octahedron_is_ph2() {
        let oct = SimplicialComplex::octahedral(1, &["x", "y", "z"]).unwrap();
        assert!(punctured_check(&oct, 2).holds);
        assert!(!punctured_check(&oct, 1).holds);
    }

    #[test]
    fn contractible_complements_pass_vacuously() {
        let path = SimplicialComplex::from_labeled_facets(
            vec!["a".into(), "b".into(), "c".into()],
            &[vec!["a", "b"], vec!["b", "c"]],
        )
        .unwrap();
        // removing b disconnects the path, so degree 0 shows up
        let r = punctured_check(&path, 1);
        assert!(!r.holds);
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].simplex, vec!["b"]);
        assert_eq!(r.witnesses[0].offending_degrees, vec![0]);
    }

    #[test]
    fn two_disjoint_edges_fail() {
        let two = SimplicialComplex::from_labeled_facets(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            &[vec!["a", "b"], vec!["c", "d"]],
        )
        .unwrap();
        let r = punctured_check(&two, 1);
        assert!(!r.holds);
        assert!(r.witnesses.iter().any(|w| w.simplex.is_empty() && w.offending_degrees == vec![0]));
    }
}
