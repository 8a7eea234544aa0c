use std::collections::HashMap;

use crate::coxeter::{CoxeterMatrix, Word};
use crate::error::Result;
use crate::verdict::{Axiom, Verdict};

use super::{Building, ChamberSystem};

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Longest reduced word used for the gallery check. Defaults to one more
    /// than the longest Weyl distance in the table.
    pub gallery_bound: Option<usize>,
}

/// Memoised left multiplication `(s, w) ↦ sw` in canonical form.
struct LeftMul<'a> {
    coxeter: &'a CoxeterMatrix,
    cache: HashMap<(usize, Word), Word>,
}

impl<'a> LeftMul<'a> {
    fn new(coxeter: &'a CoxeterMatrix) -> Self {
        Self {
            coxeter,
            cache: HashMap::new(),
        }
    }

    fn apply(&mut self, s: usize, w: &Word) -> Result<Word> {
        if let Some(v) = self.cache.get(&(s, w.clone())) {
            return Ok(v.clone());
        }
        let v = self.coxeter.reduce(&w.prepended(s))?;
        self.cache.insert((s, w.clone()), v.clone());
        Ok(v)
    }
}

fn panel_sizes(system: &ChamberSystem) -> Verdict {
    for s in 0..system.rank() {
        if let Some(p) = system.panels(s).iter().find(|p| p.len() < 2) {
            return Verdict::fail(
                Axiom::ThinPanel,
                system.labels(p),
                format!("{:?}-panel with {} chamber", system.generators()[s], p.len()),
            );
        }
    }
    Verdict::Pass
}

/// Checks a bare chamber system: panel sizes and connectivity first, then the
/// building axioms for the Weyl distance derived from minimal galleries.
pub fn verify_chamber_system(
    system: &ChamberSystem,
    coxeter: &CoxeterMatrix,
    opts: VerifyOptions,
) -> Result<Verdict> {
    let v = panel_sizes(system);
    if !v.is_pass() {
        return Ok(v);
    }
    if !system.is_connected() {
        let comp = system.residue(0, coxeter.all());
        let outside = (0..system.num_chambers()).find(|c| comp.binary_search(c).is_err());
        let pair = vec![system.label(0).to_string(), system.label(outside.unwrap_or(0)).to_string()];
        return Ok(Verdict::fail(Axiom::Connectivity, pair, "no gallery joins these chambers"));
    }
    let b = Building::from_system(system.clone(), coxeter.clone())?;
    verify_building(&b, opts)
}

/// Exhaustive check of WD1-WD3, agreement of `δ = s` with `s`-adjacency, and
/// the gallery characterization over all reduced words up to the bound.
/// Returns the first counterexample.
pub fn verify_building(b: &Building, opts: VerifyOptions) -> Result<Verdict> {
    let sys = b.system();
    let m = b.coxeter();
    let n = b.num_chambers();
    let name = |c: usize| sys.label(c).to_string();
    let ws = |w: &Word| m.word_string(w);

    let v = panel_sizes(sys);
    if !v.is_pass() {
        return Ok(v);
    }

    for c in 0..n {
        for d in 0..n {
            if b.delta(c, d).is_empty() != (c == d) {
                return Ok(Verdict::fail(
                    Axiom::Wd1,
                    vec![name(c), name(d)],
                    format!("δ = {}", ws(b.delta(c, d))),
                ));
            }
        }
    }

    // into[c][s]: chambers C' with δ(C', c) = s
    let into: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|c| {
            (0..m.rank())
                .map(|s| (0..n).filter(|&x| b.delta(x, c).letters() == [s]).collect())
                .collect()
        })
        .collect();
    let mut left = LeftMul::new(m);

    for c in 0..n {
        for d in 0..n {
            let w = b.delta(c, d);
            for s in 0..m.rank() {
                let sw = left.apply(s, w)?;
                let longer = sw.len() == w.len() + 1;
                for &x in &into[c][s] {
                    let got = b.delta(x, d);
                    let ok = if longer { got == &sw } else { got == &sw || got == w };
                    if !ok {
                        return Ok(Verdict::fail(
                            Axiom::Wd2,
                            vec![name(x), name(c), name(d)],
                            format!(
                                "δ(C', C) = {}, δ(C, D) = {}, δ(C', D) = {}, expected {}",
                                m.generators()[s],
                                ws(w),
                                ws(got),
                                if longer { ws(&sw) } else { format!("{} or {}", ws(&sw), ws(w)) }
                            ),
                        ));
                    }
                }
            }
        }
    }

    for c in 0..n {
        for d in 0..n {
            let w = b.delta(c, d);
            for s in 0..m.rank() {
                let sw = left.apply(s, w)?;
                if !into[c][s].iter().any(|&x| b.delta(x, d) == &sw) {
                    return Ok(Verdict::fail(
                        Axiom::Wd3,
                        vec![name(c), name(d)],
                        format!(
                            "no C' with δ(C', C) = {} and δ(C', D) = {}",
                            m.generators()[s],
                            ws(&sw)
                        ),
                    ));
                }
            }
        }
    }

    for c in 0..n {
        for s in 0..m.rank() {
            for d in 0..n {
                if sys.adjacent(s, c, d) != (b.delta(c, d).letters() == [s]) {
                    return Ok(Verdict::fail(
                        Axiom::Adjacency,
                        vec![name(c), name(d)],
                        format!(
                            "{}-adjacent: {}, δ = {}",
                            m.generators()[s],
                            sys.adjacent(s, c, d),
                            ws(b.delta(c, d))
                        ),
                    ));
                }
            }
        }
    }

    let bound = opts
        .gallery_bound
        .unwrap_or_else(|| (0..n * n).map(|i| b.delta(i / n, i % n).len()).max().unwrap_or(0) + 1);
    let words = reduced_word_tree(m, bound)?;
    for c in 0..n {
        if let Some(v) = gallery_check(b, c, &words) {
            return Ok(v);
        }
    }
    Ok(Verdict::Pass)
}

/// A reduced word up to the bound: its canonical form and the index of the
/// word with the last letter removed.
struct TreeNode {
    word: Word,
    canon: Word,
    parent: usize,
}

/// All reduced words of length at most `bound`, parents before children.
fn reduced_word_tree(m: &CoxeterMatrix, bound: usize) -> Result<Vec<TreeNode>> {
    let mut nodes = vec![TreeNode {
        word: Word::identity(),
        canon: Word::identity(),
        parent: 0,
    }];
    let mut i = 0;
    while i < nodes.len() {
        if nodes[i].word.len() < bound {
            for s in 0..m.rank() {
                let word = nodes[i].word.appended(s);
                let canon = m.reduce(&word)?;
                if canon.len() == word.len() {
                    nodes.push(TreeNode { word, canon, parent: i });
                }
            }
        }
        i += 1;
    }
    Ok(nodes)
}

/// Compares, for every reduced word `w`, the endpoints of galleries of type
/// `w` from `c` with `{D : δ(c, D) = w}`.
fn gallery_check(b: &Building, c: usize, words: &[TreeNode]) -> Option<Verdict> {
    let sys = b.system();
    let m = b.coxeter();
    let mut by_distance: HashMap<&Word, Vec<usize>> = HashMap::new();
    for d in 0..b.num_chambers() {
        by_distance.entry(b.delta(c, d)).or_default().push(d);
    }
    let none = Vec::new();
    let mut ends: Vec<Vec<usize>> = Vec::with_capacity(words.len());
    for (i, node) in words.iter().enumerate() {
        let here = if i == 0 {
            vec![c]
        } else {
            let s = node.word.last().expect("non-root words are nonempty");
            let mut e: Vec<usize> = ends[node.parent].iter().flat_map(|&x| sys.neighbours(s, x)).collect();
            e.sort_unstable();
            e.dedup();
            e
        };
        let expected = by_distance.get(&node.canon).unwrap_or(&none);
        if &here != expected {
            return Some(Verdict::fail(
                Axiom::Gallery,
                sys.labels(&[c]),
                format!(
                    "galleries of type {} end at {:?}, chambers at distance {} are {:?}",
                    m.word_string(&node.word),
                    sys.labels(&here),
                    m.word_string(&node.canon),
                    sys.labels(expected)
                ),
            ));
        }
        ends.push(here);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Order;

    #[test]
    fn thin_and_fano_pass() {
        for m in [3, 4] {
            let b = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(m)), 100).unwrap();
            assert!(verify_building(&b, VerifyOptions::default()).unwrap().is_pass());
        }
        let fano = Building::fano();
        assert!(verify_building(&fano, VerifyOptions::default()).unwrap().is_pass());
        let a3 = Building::thin(&CoxeterMatrix::type_a(3), 100).unwrap();
        assert!(verify_building(&a3, VerifyOptions::default()).unwrap().is_pass());
    }

    #[test]
    fn thin_panel_fails() {
        let sys = ChamberSystem::new(
            (0..4).map(|i| format!("c{i}")).collect(),
            vec!["s".into()],
            vec![vec![vec![0, 1, 2], vec![3]]],
        )
        .unwrap();
        let v = verify_chamber_system(&sys, &CoxeterMatrix::type_a(1).relabeled(vec!["s".into()]).unwrap(), VerifyOptions::default())
            .unwrap();
        assert_eq!(v.violation().unwrap().axiom, Axiom::ThinPanel);
    }

    #[test]
    fn corrupted_distance_fails_wd2() {
        let mut b = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(3)), 100).unwrap();
        let id = b.system().index_of("1").unwrap();
        let st = b.system().index_of("s.t").unwrap();
        let ts = b.coxeter().parse_word(&["t", "s"]).unwrap();
        b.set_delta(id, st, ts).unwrap();
        let v = verify_building(&b, VerifyOptions::default()).unwrap();
        assert_eq!(v.violation().unwrap().axiom, Axiom::Wd2);
    }

    #[test]
    fn wrong_type_fails() {
        // the thin I2(3) chamber system is not a building of type I2(4)
        let b3 = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(3)), 100).unwrap();
        let v = verify_chamber_system(
            b3.system(),
            &CoxeterMatrix::dihedral(Order::Finite(4)),
            VerifyOptions::default(),
        )
        .unwrap();
        assert!(!v.is_pass());
    }

    #[test]
    fn disconnected_system_fails() {
        let sys = ChamberSystem::new(
            (0..4).map(|i| format!("c{i}")).collect(),
            vec!["s".into()],
            vec![vec![vec![0, 1], vec![2, 3]]],
        )
        .unwrap();
        let a1 = CoxeterMatrix::type_a(1).relabeled(vec!["s".into()]).unwrap();
        let v = verify_chamber_system(&sys, &a1, VerifyOptions::default()).unwrap();
        assert_eq!(v.violation().unwrap().axiom, Axiom::Connectivity);
    }
}
