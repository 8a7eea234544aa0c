use std::collections::HashMap;

use crate::coxeter::Word;
use crate::error::{invalid, Result};

use super::Building;

/// Whether `subset` is W-isometric to the thin building: `D ↦ δ(C, D)` is a
/// bijection onto `W` for `C` the first chamber, and
/// `δ(D, D') = δ(C, D)⁻¹δ(C, D')` throughout.
pub fn is_apartment(b: &Building, subset: &[usize], cutoff: usize) -> Result<bool> {
    let m = b.coxeter();
    let order = m.elements(cutoff)?.len();
    let mut chambers = subset.to_vec();
    chambers.sort_unstable();
    chambers.dedup();
    if chambers.len() != subset.len() {
        return Err(invalid("apartment candidate repeats a chamber"));
    }
    if chambers.iter().any(|&c| c >= b.num_chambers()) {
        return Err(invalid("chamber index out of range"));
    }
    if chambers.len() != order {
        return Ok(false);
    }
    let c = subset[0];
    let mut image: Vec<&Word> = chambers.iter().map(|&d| b.delta(c, d)).collect();
    image.sort();
    image.dedup();
    if image.len() != order {
        return Ok(false);
    }
    for &d in &chambers {
        for &e in &chambers {
            if b.delta(d, e) != &m.quotient(b.delta(c, d), b.delta(c, e))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for an apartment containing `c` and `d` by building an isometric
/// copy of `W` around `c`, one element at a time, with backtracking.
/// Returns the chambers in the order of `W`'s canonical enumeration.
pub fn find_apartment(b: &Building, c: usize, d: usize, cutoff: usize) -> Result<Option<Vec<usize>>> {
    let m = b.coxeter();
    let elements = m.elements(cutoff)?;
    let index: HashMap<&Word, usize> = elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let k = elements.len();
    // parent[i] = (j, s) with elements[j]·s = elements[i], ℓ one less
    let mut parent = vec![(0, 0); k];
    for (i, w) in elements.iter().enumerate().skip(1) {
        let s = w.last().expect("non-identity");
        let u = Word::from(w.letters()[..w.len() - 1].to_vec());
        parent[i] = (index[&u], s);
    }
    // quotient[j][i] = elements[j]⁻¹ elements[i]
    let mut quotient = vec![vec![Word::identity(); k]; k];
    for (j, u) in elements.iter().enumerate() {
        for (i, w) in elements.iter().enumerate() {
            quotient[j][i] = m.quotient(u, w)?;
        }
    }
    let target = index.get(b.delta(c, d)).copied();
    let Some(target) = target else {
        return Ok(None);
    };
    let mut assigned = vec![usize::MAX; k];
    assigned[0] = c;
    let ok = place(b, &elements, &parent, &quotient, target, d, 1, &mut assigned);
    Ok(ok.then_some(assigned))
}

#[allow(clippy::too_many_arguments)]
fn place(
    b: &Building,
    elements: &[Word],
    parent: &[(usize, usize)],
    quotient: &[Vec<Word>],
    target: usize,
    d: usize,
    i: usize,
    assigned: &mut [usize],
) -> bool {
    if i == elements.len() {
        return true;
    }
    let (j, s) = parent[i];
    let c = assigned[0];
    let candidates: Vec<usize> = b
        .system()
        .neighbours(s, assigned[j])
        .filter(|&x| if i == target { x == d } else { x != d })
        .filter(|&x| b.delta(c, x) == &elements[i])
        .collect();
    for x in candidates {
        if assigned[..i].contains(&x) {
            continue;
        }
        if (0..i).all(|v| b.delta(assigned[v], x) == &quotient[v][i]) {
            assigned[i] = x;
            if place(b, elements, parent, quotient, target, d, i + 1, assigned) {
                return true;
            }
        }
    }
    assigned[i] = usize::MAX;
    false
}
