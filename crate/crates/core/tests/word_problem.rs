mod common;

use coxcover::coxeter::{CoxeterMatrix, Order, Word};
use proptest::prelude::*;

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max_len).prop_map(|letters| {
        let mut w = Word::identity();
        for s in letters {
            w.push(s);
        }
        w
    })
}

fn fixture() -> impl Strategy<Value = usize> {
    0..common::finite_fixtures().len()
}

proptest! {
    #[test]
    fn reduce_is_idempotent(g in fixture(), w in word(3, 12)) {
        let g = &common::finite_fixtures()[g];
        let w = Word::from_iter(w.iter().filter(|&s| s < g.matrix.rank()));
        let r = g.matrix.reduce(&w).unwrap();
        prop_assert_eq!(g.matrix.reduce(&r).unwrap(), r.clone());
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!((w.len() - r.len()) % 2, 0);
    }

    #[test]
    fn reduce_matches_permutations(g in fixture(), w in word(3, 12)) {
        let g = &common::finite_fixtures()[g];
        let w = Word::from_iter(w.iter().filter(|&s| s < g.matrix.rank()));
        let r = g.matrix.reduce(&w).unwrap();
        prop_assert_eq!(g.eval(&r), g.eval(&w));
        prop_assert_eq!(r.len(), common::cayley_length(g, &g.eval(&w)));
    }

    #[test]
    fn inverse_and_quotient(g in fixture(), u in word(3, 8), v in word(3, 8)) {
        let g = &common::finite_fixtures()[g];
        let rank = g.matrix.rank();
        let u = Word::from_iter(u.iter().filter(|&s| s < rank));
        let v = Word::from_iter(v.iter().filter(|&s| s < rank));
        let q = g.matrix.quotient(&u, &v).unwrap();
        prop_assert!(g.matrix.words_equal(&g.matrix.multiply(&u, &q).unwrap(), &v).unwrap());
        let uu = u.concat(&u.inverse());
        prop_assert!(g.matrix.reduce(&uu).unwrap().is_empty());
    }

    #[test]
    fn infinite_dihedral_words_only_cancel(w in word(2, 20)) {
        // in D∞ a word is reduced iff no letter repeats immediately
        let m = CoxeterMatrix::dihedral(Order::Infinite);
        let mut stack: Vec<usize> = Vec::new();
        for s in w.iter() {
            if stack.last() == Some(&s) { stack.pop(); } else { stack.push(s); }
        }
        let r = m.reduce(&w).unwrap();
        prop_assert_eq!(r.letters(), &stack[..]);
    }

    #[test]
    fn flip_orbit_members_are_equal(w in word(3, 7)) {
        let m = CoxeterMatrix::type_a(3);
        let r = m.reduce(&w).unwrap();
        let orbit = m.reduced_expressions(&r).unwrap();
        prop_assert!(orbit.contains(&r));
        for x in &orbit {
            prop_assert_eq!(x.len(), r.len());
            prop_assert_eq!(&m.reduce(x).unwrap(), &r);
        }
    }
}

#[test]
fn group_orders_match_oracle() {
    for g in common::finite_fixtures() {
        assert_eq!(g.matrix.elements(1000).unwrap().len(), g.order, "{}", g.name);
    }
}
