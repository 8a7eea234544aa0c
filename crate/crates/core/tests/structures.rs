use coxcover::chambers::{find_apartment, verify_building, Building, VerifyOptions};
use coxcover::cover::{build_ball, verify_cover, BallOptions, FoldingData};
use coxcover::coxeter::{CoxeterMatrix, GenSet, Order};
use coxcover::io::{BallJson, BuildingJson, ComplexJson, FoldingJson};
use coxcover::simplicial::{reduced_homology, SimplicialComplex};
use proptest::prelude::*;

#[allow(clippy::needless_range_loop)]
fn matrix(rank: usize) -> impl Strategy<Value = CoxeterMatrix> {
    let pairs = rank * (rank - 1) / 2;
    prop::collection::vec(prop::sample::select(vec![0u32, 2, 3, 4, 5, 6]), pairs).prop_map(move |entries| {
        let mut rows = vec![vec![1u32; rank]; rank];
        let mut k = 0;
        for i in 0..rank {
            for j in i + 1..rank {
                rows[i][j] = entries[k];
                rows[j][i] = entries[k];
                k += 1;
            }
        }
        let gens = (0..rank).map(|i| format!("g{i}")).collect();
        CoxeterMatrix::from_codes(gens, rows).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spherical_sets_are_downward_closed(m in matrix(4)) {
        let poset = m.spherical_poset();
        for &t in poset.subsets() {
            for s in t.iter() {
                prop_assert!(poset.contains(t.without(s)));
            }
        }
        // pairs are spherical exactly when the entry is finite
        for s in 0..4 {
            for t in s + 1..4 {
                let pair = GenSet::singleton(s).with(t);
                prop_assert_eq!(poset.contains(pair), m.m(s, t).is_finite());
            }
        }
    }

    #[test]
    fn nerve_faces_are_spherical(m in matrix(4)) {
        let nerve = m.nerve();
        prop_assert_eq!(nerve.faces().count(), m.spherical_poset().len());
    }

    #[test]
    fn complex_json_round_trip(m in matrix(5)) {
        let nerve = m.nerve();
        let text = serde_json::to_string(&ComplexJson::of(&nerve)).unwrap();
        let back: ComplexJson = serde_json::from_str(&text).unwrap();
        let again = back.load().unwrap();
        prop_assert!(again.same_labeled(&nerve));
        prop_assert_eq!(reduced_homology(&again), reduced_homology(&nerve));
    }
}

#[test]
fn building_json_round_trip_verifies() {
    for b in [Building::fano(), Building::thin(&CoxeterMatrix::type_a(3), 100).unwrap()] {
        let text = serde_json::to_string(&BuildingJson::of(&b, true)).unwrap();
        let back: BuildingJson = serde_json::from_str(&text).unwrap();
        let again = back.load().unwrap().into_building().unwrap();
        assert!(verify_building(&again, VerifyOptions::default()).unwrap().is_pass());
        assert_eq!(again.delta_rows(), b.delta_rows());
    }
}

#[test]
fn ball_export_reloads_and_reverifies() {
    let hex = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(3)), 100).unwrap();
    let fd = FoldingData::new(SimplicialComplex::points(["s", "t"]), hex.coxeter().clone(), vec![0, 1]).unwrap();
    let ball = build_ball(&fd, &hex, 0, 4, BallOptions::default()).unwrap();
    let text = serde_json::to_string(&BallJson::of(&ball)).unwrap();
    let again = serde_json::from_str::<BallJson>(&text).unwrap().load().unwrap();
    assert_eq!(verify_cover(&again, 3).unwrap(), verify_cover(&ball, 3).unwrap());
    assert_eq!(again.sphere_sizes(), ball.sphere_sizes());
}

#[test]
fn folding_json_matches_constructor() {
    let text = r#"{"L":{"vertices":["s","t"],"facets":[["s"],["t"]]},
                   "target":{"generators":["s","t"],"matrix":[[1,3],[3,1]]},
                   "f":{"s":"s","t":"t"}}"#;
    let fd = serde_json::from_str::<FoldingJson>(text).unwrap().load().unwrap();
    assert_eq!(fd.surgered().m(0, 1), Order::Infinite);
    assert_eq!(fd.deleted_edges(), vec![("s".to_string(), "t".to_string())]);
}

#[test]
fn opposite_fano_flags_span_an_apartment() {
    let fano = Building::fano();
    for d in 0..fano.num_chambers() {
        if fano.delta(0, d).len() == 3 {
            let apt = find_apartment(&fano, 0, d, 100).unwrap().unwrap();
            assert_eq!(apt.len(), 6);
        }
    }
}
