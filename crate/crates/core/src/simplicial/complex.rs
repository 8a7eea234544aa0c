use std::collections::{BTreeSet, HashMap};

use crate::error::{invalid, Result};

use super::Poset;

/// A finite abstract simplicial complex with labelled vertices.
///
/// Faces are sorted vertex-index lists and the set is closed under subsets.
/// The empty face is present in every non-void complex, so `{∅}` (the empty
/// complex, whose reduced homology is `Z` in degree `-1`) and the void complex
/// (no faces at all) are distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the downward closure of `facets`. Every listed vertex is a face.
    pub fn from_facets(
        vertices: Vec<String>,
        facets: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(invalid(format!("duplicate vertex label {v:?}")));
            }
        }
        let mut faces = BTreeSet::new();
        for mut facet in facets {
            facet.sort_unstable();
            facet.dedup();
            if let Some(&bad) = facet.iter().find(|&&v| v >= vertices.len()) {
                return Err(invalid(format!("vertex index {bad} out of range")));
            }
            if facet.len() > 24 {
                return Err(invalid("facets with more than 24 vertices are not supported"));
            }
            close_downward(&facet, &mut faces);
        }
        for v in 0..vertices.len() {
            faces.insert(vec![v]);
        }
        if !faces.is_empty() {
            faces.insert(Vec::new());
        }
        Ok(Self { vertices, faces })
    }

    /// Builds a complex from facets given by vertex label.
    pub fn from_labeled_facets<S: AsRef<str>>(
        vertices: Vec<String>,
        facets: &[Vec<S>],
    ) -> Result<Self> {
        let index: HashMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let facets = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        index
                            .get(l.as_ref())
                            .copied()
                            .ok_or_else(|| invalid(format!("unknown vertex {:?}", l.as_ref())))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_facets(vertices, facets)
    }

    /// The complex with no faces at all.
    pub fn void() -> Self {
        Self {
            vertices: Vec::new(),
            faces: BTreeSet::new(),
        }
    }

    /// The complex `{∅}`, the unit for joins.
    pub fn empty() -> Self {
        Self {
            vertices: Vec::new(),
            faces: BTreeSet::from([Vec::new()]),
        }
    }

    pub fn simplex<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Self {
        let vertices: Vec<String> = labels.into_iter().map(Into::into).collect();
        let all = (0..vertices.len()).collect();
        Self::from_facets(vertices, [all]).expect("simplex is valid")
    }

    /// A discrete set of points.
    pub fn points<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Self {
        let vertices: Vec<String> = labels.into_iter().map(Into::into).collect();
        Self::from_facets(vertices, []).expect("point set is valid")
    }

    /// Boundary of the simplex on `labels`.
    pub fn simplex_boundary<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Self {
        let vertices: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = vertices.len();
        let facets = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect());
        Self::from_facets(vertices, facets).expect("boundary is valid")
    }

    /// A cycle graph on the given labels, in order.
    pub fn cycle<L: Into<String>>(labels: impl IntoIterator<Item = L>) -> Self {
        let vertices: Vec<String> = labels.into_iter().map(Into::into).collect();
        let n = vertices.len();
        let facets = (0..n).map(|i| vec![i, (i + 1) % n]);
        Self::from_facets(vertices, facets).expect("cycle is valid")
    }

    /// `O(p, V)`: the join of `|V|` copies of a `(p+1)`-point set, i.e. the
    /// partial sections `U -> {0..p}`. Vertex `(v, g)` is labelled `v:g`.
    pub fn octahedral<L: AsRef<str>>(p: usize, base: &[L]) -> Result<Self> {
        if base.is_empty() {
            return Err(invalid("octahedral complex needs a nonempty vertex set"));
        }
        let n = base.len();
        let vertices: Vec<String> = base
            .iter()
            .flat_map(|v| (0..=p).map(move |g| format!("{}:{g}", v.as_ref())))
            .collect();
        // facets are the full sections g: V -> {0..p}
        let mut facets = Vec::new();
        let mut g = vec![0usize; n];
        loop {
            facets.push((0..n).map(|v| v * (p + 1) + g[v]).collect());
            let mut i = 0;
            while i < n && g[i] == p {
                g[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            g[i] += 1;
        }
        Self::from_facets(vertices, facets)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn faces(&self) -> impl Iterator<Item = &[usize]> {
        self.faces.iter().map(Vec::as_slice)
    }

    /// Faces with `d + 1` vertices, in lexicographic order.
    pub fn faces_of_dim(&self, d: usize) -> Vec<&[usize]> {
        self.faces().filter(|f| f.len() == d + 1).collect()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.faces.contains(&f)
    }

    pub fn contains_labels<S: AsRef<str>>(&self, labels: &[S]) -> bool {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Option<Vec<_>>>()
            .is_some_and(|f| self.contains(&f))
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension; `-1` for `{∅}` and `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Face counts in dimensions `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.dim().unwrap_or(-1);
        let mut f = vec![0; (top + 1).max(0) as usize];
        for face in &self.faces {
            if !face.is_empty() {
                f[face.len() - 1] += 1;
            }
        }
        f
    }

    /// Unreduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| {
                !(0..self.vertices.len()).any(|v| {
                    if f.contains(&v) {
                        return false;
                    }
                    let mut g = (*f).clone();
                    g.push(v);
                    g.sort_unstable();
                    self.faces.contains(&g)
                })
            })
            .cloned()
            .collect()
    }

    pub fn face_labels(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// Faces as sorted label sets, for comparing complexes with different
    /// vertex orders.
    pub fn labeled_faces(&self) -> BTreeSet<Vec<String>> {
        self.faces
            .iter()
            .map(|f| {
                let mut l = self.face_labels(f);
                l.sort();
                l
            })
            .collect()
    }

    pub fn same_labeled(&self, other: &Self) -> bool {
        let mut a = self.vertices.clone();
        let mut b = other.vertices.clone();
        a.sort();
        b.sort();
        a == b && self.labeled_faces() == other.labeled_faces()
    }

    /// The full subcomplex on `keep`; vertex labels are retained.
    pub fn full_subcomplex(&self, keep: &[usize]) -> Self {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; self.vertices.len()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let faces = self
            .faces
            .iter()
            .filter(|f| f.iter().all(|&v| new_index[v] != usize::MAX))
            .map(|f| f.iter().map(|&v| new_index[v]).collect())
            .collect();
        Self {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            faces,
        }
    }

    /// All faces containing no vertex of `drop` (the complement `L - σ`).
    pub fn without_vertices(&self, drop: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|v| !drop.contains(v))
            .collect();
        self.full_subcomplex(&keep)
    }

    /// The simplicial join. Vertex labels must be disjoint.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if let Some(v) = self.vertices.iter().find(|v| other.vertices.contains(v)) {
            return Err(invalid(format!("join operands share vertex {v:?}")));
        }
        let shift = self.vertices.len();
        let mut faces = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                let mut f = a.clone();
                f.extend(b.iter().map(|&v| v + shift));
                faces.insert(f);
            }
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        Ok(Self { vertices, faces })
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.faces.contains(&if a < b { vec![a, b] } else { vec![b, a] })
    }

    /// A smallest vertex set that is pairwise joined by edges but does not
    /// span a face, if any.
    pub fn missing_flag_simplex(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        // grow cliques by size; the first non-face found is minimal
        let mut cliques: Vec<Vec<usize>> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| vec![a, b]))
            .filter(|e| self.faces.contains(e))
            .collect();
        while !cliques.is_empty() {
            let mut next = Vec::new();
            for c in &cliques {
                let last = *c.last().expect("cliques are nonempty");
                for v in last + 1..n {
                    if c.iter().all(|&u| self.has_edge(u, v)) {
                        let mut d = c.clone();
                        d.push(v);
                        if !self.faces.contains(&d) {
                            return Some(d);
                        }
                        next.push(d);
                    }
                }
            }
            cliques = next;
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.missing_flag_simplex().is_none()
    }

    /// Poset of nonempty faces (optionally with `∅`), ordered by inclusion.
    pub fn face_poset(&self, include_empty: bool) -> Poset {
        let faces: Vec<&Vec<usize>> = self
            .faces
            .iter()
            .filter(|f| include_empty || !f.is_empty())
            .collect();
        let labels = faces
            .iter()
            .map(|f| format!("{{{}}}", self.face_labels(f).join(",")))
            .collect();
        Poset::from_fn(labels, |a, b| {
            faces[a].len() < faces[b].len() && faces[a].iter().all(|v| faces[b].contains(v))
        })
        .expect("inclusion is a strict order")
    }
}

fn close_downward(facet: &[usize], faces: &mut BTreeSet<Vec<usize>>) {
    if faces.contains(facet) {
        return;
    }
    let n = facet.len();
    for mask in 0u32..(1 << n) {
        let f: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
        faces.insert(f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_f_vectors() {
        assert_eq!(SimplicialComplex::octahedral(1, &["a", "b"]).unwrap().f_vector(), vec![4, 4]);
        assert_eq!(
            SimplicialComplex::octahedral(1, &["a", "b", "c"]).unwrap().f_vector(),
            vec![6, 12, 8]
        );
        assert_eq!(SimplicialComplex::octahedral(2, &["a", "b"]).unwrap().f_vector(), vec![6, 9]);
    }

    #[test]
    fn join_examples() {
        let two = SimplicialComplex::points(["a", "b"]);
        let two2 = SimplicialComplex::points(["c", "d"]);
        let c4 = two.join(&two2).unwrap();
        assert_eq!(c4.f_vector(), vec![4, 4]);
        assert!(c4.same_labeled(&SimplicialComplex::cycle(["a", "c", "b", "d"])));
        assert!(two.join(&two).is_err());

        let x = SimplicialComplex::simplex_boundary(["x", "y", "z"]);
        assert_eq!(x.join(&SimplicialComplex::empty()).unwrap(), x);

        let k33 = SimplicialComplex::points(["a", "b", "c"])
            .join(&SimplicialComplex::points(["d", "e", "f"]))
            .unwrap();
        assert_eq!(k33.f_vector(), vec![6, 9]);
    }

    #[test]
    fn full_subcomplex_examples() {
        let c4 = SimplicialComplex::cycle(["a", "b", "c", "d"]);
        let path = c4.without_vertices(&[0]);
        assert_eq!(path.f_vector(), vec![3, 2]);
        assert_eq!(c4.without_vertices(&[]), c4);

        let oct = SimplicialComplex::octahedral(1, &["a", "b", "c"]).unwrap();
        let cone = oct.without_vertices(&[0]);
        // the antipode of the removed vertex is a cone point over a 4-cycle
        assert_eq!(cone.f_vector(), vec![5, 8, 4]);
    }

    #[test]
    fn flag_detection() {
        assert!(SimplicialComplex::cycle(["a", "b", "c", "d"]).is_flag());
        let hollow = SimplicialComplex::simplex_boundary(["a", "b", "c"]);
        assert_eq!(hollow.missing_flag_simplex(), Some(vec![0, 1, 2]));
        assert!(SimplicialComplex::simplex(["a", "b", "c"]).is_flag());
    }

    #[test]
    fn void_and_empty_differ() {
        assert_eq!(SimplicialComplex::void().dim(), None);
        assert_eq!(SimplicialComplex::empty().dim(), Some(-1));
        let only_empty = SimplicialComplex::from_facets(vec![], [vec![]]).unwrap();
        assert_eq!(only_empty, SimplicialComplex::empty());
    }

    #[test]
    fn facets_are_maximal() {
        let oct = SimplicialComplex::octahedral(1, &["a", "b", "c"]).unwrap();
        assert_eq!(oct.facets().len(), 8);
        assert!(oct.facets().iter().all(|f| f.len() == 3));
    }
}
