use crate::coxeter::{CoxeterMatrix, GenSet, Order};
use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidFolding(msg.into())
}

/// A simplicial map `f` from a complex `L` on `S` to the nerve of a target
/// Coxeter system `(W', S')`, together with the surgered matrix on `S`.
#[derive(Clone, Debug)]
pub struct FoldingData {
    complex: SimplicialComplex,
    target: CoxeterMatrix,
    f: Vec<usize>,
    surgered: CoxeterMatrix,
}

impl FoldingData {
    /// `f[s]` is the target generator of the `s`-th vertex of `complex`.
    pub fn new(complex: SimplicialComplex, target: CoxeterMatrix, f: Vec<usize>) -> Result<Self> {
        let n = complex.num_vertices();
        if f.len() != n {
            return Err(bad(format!("map has {} entries for {n} vertices", f.len())));
        }
        if n > GenSet::CAPACITY {
            return Err(bad(format!("at most {} vertices are supported", GenSet::CAPACITY)));
        }
        if let Some(&t) = f.iter().find(|&&t| t >= target.rank()) {
            return Err(bad(format!("target generator index {t} out of range")));
        }
        let mut hit = vec![false; target.rank()];
        for &t in &f {
            hit[t] = true;
        }
        if let Some(t) = hit.iter().position(|h| !h) {
            return Err(bad(format!("target generator {:?} is not in the image", target.label(t))));
        }
        for face in complex.faces() {
            let image: GenSet = face.iter().map(|&v| f[v]).collect();
            if image.len() != face.len() {
                return Err(bad(format!(
                    "map is not injective on the face {:?}",
                    complex.face_labels(face)
                )));
            }
            if !target.is_spherical(image) {
                return Err(bad(format!(
                    "face {:?} maps to a non-spherical subset",
                    complex.face_labels(face)
                )));
            }
        }
        let surgered = CoxeterMatrix::from_fn(complex.vertices().to_vec(), |s, t| {
            if complex.has_edge(s, t) {
                target.m(f[s], f[t])
            } else {
                Order::Infinite
            }
        })
        .map_err(|e| bad(e.to_string()))?
        .with_budget(target.budget());
        Ok(Self {
            complex,
            target,
            f,
            surgered,
        })
    }

    /// Map given as `(vertex label, target label)` pairs.
    pub fn from_labels<A: AsRef<str>, B: AsRef<str>>(
        complex: SimplicialComplex,
        target: CoxeterMatrix,
        map: &[(A, B)],
    ) -> Result<Self> {
        let mut f = vec![usize::MAX; complex.num_vertices()];
        for (a, b) in map {
            let (a, b) = (a.as_ref(), b.as_ref());
            let s = complex.index_of(a).ok_or_else(|| bad(format!("unknown vertex {a:?}")))?;
            let t = target.index_of(b).ok_or_else(|| bad(format!("unknown target generator {b:?}")))?;
            if f[s] != usize::MAX {
                return Err(bad(format!("vertex {a:?} is mapped twice")));
            }
            f[s] = t;
        }
        if let Some(s) = f.iter().position(|&t| t == usize::MAX) {
            return Err(bad(format!("vertex {:?} is not mapped", complex.vertices()[s])));
        }
        Self::new(complex, target, f)
    }

    /// `L` = nerve of the target, `f` = identity. The surgery changes nothing.
    pub fn identity(target: CoxeterMatrix) -> Self {
        let f = (0..target.rank()).collect();
        Self::new(target.nerve(), target, f).expect("the nerve folds onto itself")
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn target(&self) -> &CoxeterMatrix {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.f
    }

    pub fn f(&self, s: usize) -> usize {
        self.f[s]
    }

    pub fn image(&self, t: GenSet) -> GenSet {
        t.iter().map(|s| self.f[s]).collect()
    }

    /// The surgered matrix: `m'(f(s), f(t))` on edges of `L`, `∞` elsewhere.
    pub fn surgered(&self) -> &CoxeterMatrix {
        &self.surgered
    }

    /// Pairs of generators whose entry became `∞`.
    pub fn deleted_edges(&self) -> Vec<(String, String)> {
        let m = &self.surgered;
        let mut out = Vec::new();
        for s in 0..m.rank() {
            for t in s + 1..m.rank() {
                if m.m(s, t) == Order::Infinite && self.target.m(self.f[s], self.f[t]) != Order::Infinite {
                    out.push((m.label(s).to_string(), m.label(t).to_string()));
                }
            }
        }
        out
    }

    /// Nonempty faces of `L` as generator sets.
    pub fn face_types(&self) -> Vec<GenSet> {
        let mut types: Vec<GenSet> = self
            .complex
            .faces()
            .filter(|f| !f.is_empty())
            .map(|f| f.iter().copied().collect())
            .collect();
        types.sort_by_key(|t| (t.len(), t.bits()));
        types
    }
}

/// The surgered Coxeter matrix of a folding.
pub fn surgery(fd: &FoldingData) -> CoxeterMatrix {
    fd.surgered().clone()
}

/// Outcome of comparing `L` with the nerve of the surgered system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagNerveReport {
    pub is_flag: bool,
    /// A vertex set that spans a complete graph but is not a face.
    pub missing_simplex: Option<Vec<String>>,
    pub nerve_matches: bool,
}

impl FlagNerveReport {
    /// Flag, and the nerve agrees with `L`.
    pub fn holds(&self) -> bool {
        self.is_flag && self.nerve_matches
    }
}

pub fn flag_nerve_check(fd: &FoldingData) -> FlagNerveReport {
    let l = fd.complex();
    let missing = l.missing_flag_simplex();
    let nerve = fd.surgered().nerve();
    FlagNerveReport {
        is_flag: missing.is_none(),
        missing_simplex: missing.map(|m| l.face_labels(&m)),
        nerve_matches: nerve.same_labeled(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i2(m: u32) -> CoxeterMatrix {
        CoxeterMatrix::dihedral(Order::Finite(m))
    }

    #[test]
    fn surgery_examples() {
        let edge = FoldingData::identity(i2(3));
        assert_eq!(surgery(&edge), i2(3));

        let points = SimplicialComplex::points(["s", "t"]);
        let fd = FoldingData::new(points, i2(3), vec![0, 1]).unwrap();
        assert_eq!(fd.surgered().m(0, 1), Order::Infinite);
        assert_eq!(fd.deleted_edges(), vec![("s".to_string(), "t".to_string())]);
    }

    #[test]
    fn octahedron_folds_to_square_product() {
        // vertices x0, x1 over x, ...; f is the first coordinate
        let oct = SimplicialComplex::octahedral(1, &["x", "y", "z"]).unwrap();
        let target = CoxeterMatrix::type_a(3).relabeled(vec!["x".into(), "y".into(), "z".into()]).unwrap();
        let f: Vec<usize> = oct
            .vertices()
            .iter()
            .map(|v| target.index_of(v.split(':').next().unwrap()).unwrap())
            .collect();
        let fd = FoldingData::new(oct.clone(), target.clone(), f).unwrap();
        let m = fd.surgered();
        for s in 0..m.rank() {
            for t in s + 1..m.rank() {
                let same_base = fd.f(s) == fd.f(t);
                assert_eq!(m.m(s, t) == Order::Infinite, same_base, "{} {}", m.label(s), m.label(t));
            }
        }
        assert!(flag_nerve_check(&fd).holds());
    }

    #[test]
    fn rejects_bad_maps() {
        let edge = SimplicialComplex::simplex(["a", "b"]);
        assert!(FoldingData::new(edge.clone(), i2(3), vec![0, 0]).is_err());
        let three = SimplicialComplex::points(["a", "b", "c"]);
        assert!(FoldingData::new(three, i2(3), vec![0, 0, 0]).is_err());
        let d_inf = CoxeterMatrix::dihedral(Order::Infinite);
        assert!(FoldingData::new(edge, d_inf, vec![0, 1]).is_err());
    }

    #[test]
    fn flag_nerve_examples() {
        let cycle = SimplicialComplex::cycle(["a", "b", "c", "d"]);
        let a1a1 = CoxeterMatrix::dihedral(Order::Finite(2));
        let fd = FoldingData::new(cycle, a1a1, vec![0, 1, 0, 1]).unwrap();
        assert!(flag_nerve_check(&fd).holds());

        let hollow = SimplicialComplex::simplex_boundary(["a", "b", "c"]);
        let a3 = CoxeterMatrix::type_a(3);
        let fd = FoldingData::new(hollow, a3, vec![0, 1, 2]).unwrap();
        let r = flag_nerve_check(&fd);
        assert!(!r.is_flag && !r.nerve_matches);
        assert_eq!(r.missing_simplex, Some(vec!["a".to_string(), "b".to_string(), "c".to_string()]));

        let full = FoldingData::identity(CoxeterMatrix::type_a(3));
        assert!(flag_nerve_check(&full).holds());
    }
}
