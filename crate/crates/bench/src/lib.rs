//! Workloads shared by the criterion benches.

use coxcover::chambers::Building;
use coxcover::cover::FoldingData;
use coxcover::coxeter::{CoxeterMatrix, Word};
use coxcover::simplicial::SimplicialComplex;

/// Long words in `A_n` built from a fixed letter pattern, so runs are comparable.
pub fn long_words(m: &CoxeterMatrix, count: usize, len: usize) -> Vec<Word> {
    let r = m.rank();
    (0..count)
        .map(|k| (0..len).map(|i| (i * 7 + k * 3 + i / 5) % r).collect())
        .collect()
}

/// The Fano flag building with the edge of its diagram removed.
pub fn fano_deleted_edge() -> (FoldingData, Building) {
    let b = Building::fano();
    let fd = FoldingData::new(SimplicialComplex::points(["s", "t"]), b.coxeter().clone(), vec![0, 1])
        .expect("two points fold onto the generators");
    (fd, b)
}

pub fn octahedral(p: usize, n: usize) -> SimplicialComplex {
    let base: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    SimplicialComplex::octahedral(p, &base).expect("labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_build() {
        let m = CoxeterMatrix::type_a(4);
        assert!(long_words(&m, 4, 30).iter().all(|w| w.len() == 30));
        assert_eq!(fano_deleted_edge().1.num_chambers(), 21);
        assert_eq!(octahedral(2, 3).f_vector(), vec![9, 27, 27]);
    }
}
