use crate::coxeter::{subset_label, GenSet};
use crate::error::{invalid, Result};
use crate::simplicial::{reduced_homology, HomologyReport, Poset, SimplicialComplex};

use super::Building;

/// Faces of `l` (including the empty face) as generator sets of `b`.
fn face_types(b: &Building, l: &SimplicialComplex) -> Result<Vec<GenSet>> {
    let m = b.coxeter();
    let map: Vec<usize> = l
        .vertices()
        .iter()
        .map(|v| m.index_of(v).ok_or_else(|| invalid(format!("vertex {v:?} is not a generator"))))
        .collect::<Result<_>>()?;
    let mut types: Vec<GenSet> = l.faces().map(|f| f.iter().map(|&v| map[v]).collect()).collect();
    if !types.contains(&GenSet::empty()) {
        types.push(GenSet::empty());
    }
    types.sort_by_key(|t| (t.len(), t.bits()));
    types.dedup();
    if let Some(t) = types.iter().find(|&&t| !m.is_spherical(t)) {
        return Err(invalid(format!(
            "face {} is not spherical",
            subset_label(m.generators(), *t)
        )));
    }
    Ok(types)
}

/// The order complex of the poset of pairs `(R, T)`, `T` a face of `l` or
/// empty and `R` a `T`-residue, with `(R, T) < (R', T')` iff `T ⊊ T'` and
/// `R ⊆ R'`. Vertices are labelled `{T}:C` with `C` the least chamber of `R`.
pub fn realize(b: &Building, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    let sys = b.system();
    let types = face_types(b, l)?;
    // per type: residue id of each chamber and the offset of its residues
    let mut ids = Vec::with_capacity(types.len());
    let mut offsets = Vec::with_capacity(types.len());
    let mut owners: Vec<(usize, usize)> = Vec::new();
    let mut labels = Vec::new();
    for (k, &t) in types.iter().enumerate() {
        let (id, count) = sys.residue_ids(t);
        offsets.push(owners.len());
        let mut least = vec![usize::MAX; count];
        for (c, &r) in id.iter().enumerate() {
            least[r] = least[r].min(c);
        }
        for (r, &c) in least.iter().enumerate() {
            owners.push((k, c));
            labels.push(format!("{}:{}", subset_label(b.coxeter().generators(), t), sys.label(c)));
            debug_assert_eq!(offsets[k] + r, owners.len() - 1);
        }
        ids.push(id);
    }
    let poset = Poset::from_fn(labels, |x, y| {
        let (kx, cx) = owners[x];
        let (ky, _) = owners[y];
        let (tx, ty) = (types[kx], types[ky]);
        tx != ty && tx.is_subset(ty) && offsets[ky] + ids[ky][cx] == y
    })?;
    Ok(poset.order_complex())
}

/// Reduced homology of [`realize`].
pub fn realization_homology(b: &Building, l: &SimplicialComplex) -> Result<HomologyReport> {
    Ok(reduced_homology(&realize(b, l)?))
}
