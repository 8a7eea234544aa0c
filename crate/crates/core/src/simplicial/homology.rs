use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::snf::{invariant_factors, IntMatrix};
use super::SimplicialComplex;

/// Reduced integer homology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: isize,
    pub rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<BigInt>,
}

impl DegreeHomology {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced integer homology in degrees `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    degrees: Vec<DegreeHomology>,
}

impl HomologyReport {
    pub fn degrees(&self) -> &[DegreeHomology] {
        &self.degrees
    }

    pub fn get(&self, degree: isize) -> Option<&DegreeHomology> {
        self.degrees.iter().find(|d| d.degree == degree)
    }

    /// Betti number; zero outside the computed range.
    pub fn rank(&self, degree: isize) -> usize {
        self.get(degree).map_or(0, |d| d.rank)
    }

    pub fn torsion(&self, degree: isize) -> &[BigInt] {
        self.get(degree).map_or(&[], |d| d.torsion.as_slice())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|d| d.torsion.is_empty())
    }

    /// Degrees with a nonzero group.
    pub fn support(&self) -> Vec<isize> {
        self.degrees
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.degree)
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.support().is_empty()
    }

    /// Free and zero outside degree `m`. Zero groups qualify for every `m`.
    pub fn is_free_and_concentrated_in(&self, m: isize) -> bool {
        self.is_torsion_free() && self.support().iter().all(|&d| d == m)
    }

    /// Alternating sum of Betti numbers; equals `χ(L) - 1` for non-void `L`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|d| if d.degree.rem_euclid(2) == 0 { d.rank as i64 } else { -(d.rank as i64) })
            .sum()
    }
}

/// Boundary map `C_k -> C_{k-1}` of the augmented chain complex, as sparse
/// columns of `(row, ±1)`. `faces[k + 1]` lists the `k`-faces.
fn boundary_columns(
    faces: &[Vec<&[usize]>],
    index: &[HashMap<&[usize], usize>],
    k: usize,
) -> Vec<Vec<(usize, i64)>> {
    faces[k]
        .iter()
        .map(|f| {
            (0..f.len())
                .map(|i| {
                    let mut g = f.to_vec();
                    g.remove(i);
                    let row = index[k - 1][g.as_slice()];
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect()
        })
        .collect()
}

fn assert_boundary_squared_zero(lower: &[Vec<(usize, i64)>], upper: &[Vec<(usize, i64)>]) {
    for col in upper {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(mid, a) in col {
            for &(row, b) in &lower[mid] {
                *acc.entry(row).or_default() += a * b;
            }
        }
        assert!(acc.values().all(|&v| v == 0), "boundary of a boundary is nonzero");
    }
}

fn dense(cols: &[Vec<(usize, i64)>], rows: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for &(i, v) in col {
            m.set(i, j, BigInt::from(v));
        }
    }
    m
}

/// Reduced integer simplicial homology via Smith normal forms of the
/// augmented boundary matrices.
pub fn reduced_homology(complex: &SimplicialComplex) -> HomologyReport {
    let Some(dim) = complex.dim() else {
        return HomologyReport { degrees: Vec::new() };
    };
    // slot k + 1 holds the k-faces, slot 0 holds the empty face
    let top = (dim + 1) as usize;
    let mut faces: Vec<Vec<&[usize]>> = vec![Vec::new(); top + 1];
    for f in complex.faces() {
        faces[f.len()].push(f);
    }
    let index: Vec<HashMap<&[usize], usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
        .collect();
    // boundaries[k] : C_{k-1} -> C_{k-2} in slot terms, i.e. slot k -> slot k-1
    let mut boundaries: Vec<Vec<Vec<(usize, i64)>>> = vec![Vec::new(); top + 1];
    for k in 1..=top {
        boundaries[k] = boundary_columns(&faces, &index, k);
    }
    for k in 2..=top {
        assert_boundary_squared_zero(&boundaries[k - 1], &boundaries[k]);
    }
    let factors: Vec<Vec<BigInt>> = (0..=top)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                invariant_factors(dense(&boundaries[k], faces[k - 1].len()))
            }
        })
        .collect();
    let degrees = (0..=top)
        .map(|k| {
            let out_rank = factors[k].len();
            let in_factors: &[BigInt] = if k < top { &factors[k + 1] } else { &[] };
            DegreeHomology {
                degree: k as isize - 1,
                rank: faces[k].len() - out_rank - in_factors.len(),
                torsion: in_factors.iter().filter(|d| !d.is_one()).cloned().collect(),
            }
        })
        .collect();
    HomologyReport { degrees }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_sphere_and_k33() {
        let c4 = SimplicialComplex::cycle(["a", "b", "c", "d"]);
        let h = reduced_homology(&c4);
        assert_eq!(h.support(), vec![1]);
        assert_eq!(h.rank(1), 1);

        let k33 = SimplicialComplex::octahedral(2, &["x", "y"]).unwrap();
        let h = reduced_homology(&k33);
        assert_eq!(h.support(), vec![1]);
        assert_eq!(h.rank(1), 4);

        let oct = SimplicialComplex::octahedral(1, &["x", "y", "z"]).unwrap();
        let h = reduced_homology(&oct);
        assert_eq!(h.support(), vec![2]);
        assert_eq!(h.rank(2), 1);
    }

    #[test]
    fn empty_complex_has_degree_minus_one_class() {
        let h = reduced_homology(&SimplicialComplex::empty());
        assert_eq!(h.support(), vec![-1]);
        assert!(reduced_homology(&SimplicialComplex::void()).is_acyclic());
        assert!(reduced_homology(&SimplicialComplex::simplex(["a", "b", "c"])).is_acyclic());
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // 6-vertex triangulation of RP^2
        let facets = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 5, 1],
            vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 1], vec![4, 5, 2], vec![5, 1, 3],
        ];
        let rp2 = SimplicialComplex::from_facets((0..6).map(|i| format!("v{i}")).collect(), facets)
            .unwrap();
        let h = reduced_homology(&rp2);
        assert_eq!(h.support(), vec![1]);
        assert_eq!(h.rank(1), 0);
        assert_eq!(h.torsion(1), &[BigInt::from(2)]);
        assert!(!h.is_free_and_concentrated_in(1));
    }

    #[test]
    fn euler_characteristic_matches() {
        let oct = SimplicialComplex::octahedral(2, &["x", "y", "z"]).unwrap();
        let h = reduced_homology(&oct);
        assert_eq!(h.reduced_euler_characteristic(), oct.euler_characteristic() - 1);
        assert_eq!(h.rank(2), 8);
    }
}
