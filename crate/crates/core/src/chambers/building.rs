use std::collections::HashMap;

use crate::coxeter::{CoxeterMatrix, GenSet, Order, Word};
use crate::error::{invalid, Error, Result};

use super::ChamberSystem;

/// A chamber system of type `(W, S)` together with a Weyl distance table.
///
/// Construction does not check the axioms; see [`super::verify_building`].
#[derive(Clone, Debug)]
pub struct Building {
    system: ChamberSystem,
    coxeter: CoxeterMatrix,
    /// Row-major `n x n` table of canonical words.
    delta: Vec<Word>,
}

/// Reorders the panel partitions of `system` to follow the generator order of
/// `coxeter`.
fn align(system: ChamberSystem, coxeter: &CoxeterMatrix) -> Result<ChamberSystem> {
    if system.generators() == coxeter.generators() {
        return Ok(system);
    }
    if system.rank() != coxeter.rank() {
        return Err(Error::InvalidChamberSystem(format!(
            "chamber system has {} generators, Coxeter matrix has {}",
            system.rank(),
            coxeter.rank()
        )));
    }
    let mut panels = Vec::with_capacity(coxeter.rank());
    for g in coxeter.generators() {
        let s = system
            .generators()
            .iter()
            .position(|h| h == g)
            .ok_or_else(|| Error::InvalidChamberSystem(format!("no panels for generator {g:?}")))?;
        panels.push(system.panels(s).to_vec());
    }
    ChamberSystem::new(system.chambers().to_vec(), coxeter.generators().to_vec(), panels)
}

impl Building {
    /// Derives the Weyl distance from minimal galleries: `δ(C, D)` is the
    /// reduced type of a shortest gallery from `C` to `D`.
    pub fn from_system(system: ChamberSystem, coxeter: CoxeterMatrix) -> Result<Self> {
        let system = align(system, &coxeter)?;
        let n = system.num_chambers();
        let mut delta = Vec::with_capacity(n * n);
        for c in 0..n {
            for (d, ty) in system.minimal_gallery_types(c).into_iter().enumerate() {
                let ty = ty.ok_or_else(|| {
                    Error::NotABuilding(format!(
                        "chambers {:?} and {:?} are not connected by a gallery",
                        system.label(c),
                        system.label(d)
                    ))
                })?;
                delta.push(coxeter.reduce(&ty)?);
            }
        }
        Ok(Self { system, coxeter, delta })
    }

    /// Uses an explicit distance table, `rows[c][d] = δ(c, d)`. Words are
    /// reduced to canonical form but otherwise taken as given.
    pub fn with_delta(
        system: ChamberSystem,
        coxeter: CoxeterMatrix,
        rows: Vec<Vec<Word>>,
    ) -> Result<Self> {
        let system = align(system, &coxeter)?;
        let n = system.num_chambers();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidChamberSystem(format!(
                "distance table must be {n} x {n}"
            )));
        }
        let mut delta = Vec::with_capacity(n * n);
        for w in rows.into_iter().flatten() {
            if w.iter().any(|s| s >= coxeter.rank()) {
                return Err(invalid("distance word uses an unknown generator"));
            }
            delta.push(coxeter.reduce(&w)?);
        }
        Ok(Self { system, coxeter, delta })
    }

    /// The thin building: chambers are the elements of a finite `W`, with
    /// `δ(v, w) = v⁻¹w`.
    pub fn thin(coxeter: &CoxeterMatrix, cutoff: usize) -> Result<Self> {
        let elements = coxeter.elements(cutoff)?;
        let index: HashMap<&Word, usize> = elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut panels = Vec::with_capacity(coxeter.rank());
        for s in 0..coxeter.rank() {
            let mut partition = Vec::new();
            for (i, w) in elements.iter().enumerate() {
                let j = index[&coxeter.reduce(&w.appended(s))?];
                if i < j {
                    partition.push(vec![i, j]);
                }
            }
            panels.push(partition);
        }
        let labels = elements.iter().map(|w| coxeter.word_string(w)).collect();
        let system = ChamberSystem::new(labels, coxeter.generators().to_vec(), panels)?;
        let mut delta = Vec::with_capacity(elements.len().pow(2));
        for v in &elements {
            for w in &elements {
                delta.push(coxeter.quotient(v, w)?);
            }
        }
        Ok(Self {
            system,
            coxeter: coxeter.clone(),
            delta,
        })
    }

    /// A single panel of `q` chambers over one generator.
    pub fn rank_one(generator: &str, q: usize) -> Self {
        let system = ChamberSystem::new(
            (0..q).map(|i| format!("c{i}")).collect(),
            vec![generator.to_string()],
            vec![vec![(0..q).collect()]],
        )
        .expect("one panel partitions the chambers");
        let coxeter = CoxeterMatrix::type_a(1)
            .relabeled(vec![generator.to_string()])
            .expect("rank one");
        Self::from_system(system, coxeter).expect("a panel is connected")
    }

    /// The flag building of a rank-2 incidence geometry: chambers are the
    /// incident point-line pairs, `s`-panels share a point and `t`-panels
    /// share a line. The type is `I2(m)`.
    pub fn from_incidence<P: AsRef<str>, L: AsRef<str>>(
        points: &[P],
        lines: &[L],
        incidences: &[(usize, usize)],
        m: u32,
    ) -> Result<Self> {
        let mut flags: Vec<(usize, usize)> = incidences.to_vec();
        flags.sort_unstable();
        flags.dedup();
        if let Some(&(p, l)) = flags.iter().find(|&&(p, l)| p >= points.len() || l >= lines.len()) {
            return Err(invalid(format!("incidence ({p}, {l}) out of range")));
        }
        let labels = flags
            .iter()
            .map(|&(p, l)| format!("{}|{}", points[p].as_ref(), lines[l].as_ref()))
            .collect();
        let group = |key: &dyn Fn(&(usize, usize)) -> usize, count: usize| {
            let mut parts = vec![Vec::new(); count];
            for (i, f) in flags.iter().enumerate() {
                parts[key(f)].push(i);
            }
            parts.into_iter().filter(|p| !p.is_empty()).collect::<Vec<_>>()
        };
        let panels = vec![group(&|f| f.0, points.len()), group(&|f| f.1, lines.len())];
        let system = ChamberSystem::new(labels, vec!["s".into(), "t".into()], panels)?;
        Self::from_system(system, CoxeterMatrix::dihedral(Order::from_code(m)))
    }

    /// The flag building of the projective plane of order 2.
    pub fn fano() -> Self {
        let points: Vec<String> = (0..7).map(|i| format!("p{i}")).collect();
        let lines: Vec<String> = (0..7).map(|i| format!("l{i}")).collect();
        let incidences: Vec<(usize, usize)> = (0..7)
            .flat_map(|l| [0, 1, 3].map(|k| ((l + k) % 7, l)))
            .collect();
        Self::from_incidence(&points, &lines, &incidences, 3).expect("Fano plane is a valid geometry")
    }

    /// Chambers are tuples; an `s`-panel varies the coordinate of the factor
    /// owning `s`. Generator labels must be disjoint across factors.
    pub fn product(factors: &[Building]) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("product of no buildings"));
        }
        let mut generators: Vec<String> = Vec::new();
        let mut offsets = Vec::with_capacity(factors.len());
        for b in factors {
            offsets.push(generators.len());
            for g in b.coxeter.generators() {
                if generators.contains(g) {
                    return Err(invalid(format!("generator {g:?} occurs in two factors")));
                }
                generators.push(g.clone());
            }
        }
        let owner: Vec<usize> = factors
            .iter()
            .enumerate()
            .flat_map(|(i, b)| std::iter::repeat_n(i, b.coxeter.rank()))
            .collect();
        let coxeter = CoxeterMatrix::from_fn(generators.clone(), |s, t| {
            if owner[s] == owner[t] {
                factors[owner[s]].coxeter.m(s - offsets[owner[s]], t - offsets[owner[s]])
            } else {
                Order::Finite(2)
            }
        })?;
        let sizes: Vec<usize> = factors.iter().map(Building::num_chambers).collect();
        let total: usize = sizes.iter().product();
        // mixed radix, factor 0 most significant
        let decode = |mut x: usize| {
            let mut coords = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                coords[i] = x % sizes[i];
                x /= sizes[i];
            }
            coords
        };
        let encode = |coords: &[usize]| coords.iter().zip(&sizes).fold(0, |acc, (&c, &n)| acc * n + c);
        let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
        let labels = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().zip(factors).map(|(&c, b)| b.system.label(c)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let mut panels = Vec::with_capacity(generators.len());
        for s in 0..generators.len() {
            let i = owner[s];
            let local = s - offsets[i];
            let mut partition = Vec::new();
            for t in &tuples {
                let panel = factors[i].system.panel(local, t[i]);
                if panel[0] != t[i] {
                    continue;
                }
                partition.push(
                    panel
                        .iter()
                        .map(|&c| {
                            let mut u = t.clone();
                            u[i] = c;
                            encode(&u)
                        })
                        .collect(),
                );
            }
            panels.push(partition);
        }
        let system = ChamberSystem::new(labels, generators, panels)?;
        let mut delta = Vec::with_capacity(total * total);
        for a in &tuples {
            for b in &tuples {
                let mut letters = Vec::new();
                for (i, f) in factors.iter().enumerate() {
                    letters.extend(f.delta(a[i], b[i]).iter().map(|s| s + offsets[i]));
                }
                delta.push(coxeter.reduce(&Word::from(letters))?);
            }
        }
        Ok(Self { system, coxeter, delta })
    }

    /// The same building with generators renamed.
    pub fn relabeled(&self, generators: Vec<String>) -> Result<Self> {
        let coxeter = self.coxeter.relabeled(generators.clone())?;
        let panels = (0..self.rank()).map(|s| self.system.panels(s).to_vec()).collect();
        let system = ChamberSystem::new(self.system.chambers().to_vec(), generators, panels)?;
        Ok(Self {
            system,
            coxeter,
            delta: self.delta.clone(),
        })
    }

    pub fn system(&self) -> &ChamberSystem {
        &self.system
    }

    pub fn coxeter(&self) -> &CoxeterMatrix {
        &self.coxeter
    }

    pub fn num_chambers(&self) -> usize {
        self.system.num_chambers()
    }

    pub fn rank(&self) -> usize {
        self.coxeter.rank()
    }

    pub fn delta(&self, c: usize, d: usize) -> &Word {
        &self.delta[c * self.num_chambers() + d]
    }

    /// The retraction `ρ_C`: `D ↦ δ(C, D)`.
    pub fn retraction(&self, c: usize) -> &[Word] {
        let n = self.num_chambers();
        &self.delta[c * n..(c + 1) * n]
    }

    /// Chambers at Weyl length at most `radius` from `c`, sorted.
    pub fn ball(&self, c: usize, radius: usize) -> Vec<usize> {
        (0..self.num_chambers())
            .filter(|&d| self.delta(c, d).len() <= radius)
            .collect()
    }

    pub fn residue(&self, c: usize, t: GenSet) -> Vec<usize> {
        self.system.residue(c, t)
    }

    /// The full distance table as generator labels.
    pub fn delta_rows(&self) -> Vec<Vec<Vec<String>>> {
        let n = self.num_chambers();
        (0..n)
            .map(|c| (0..n).map(|d| self.coxeter.word_labels(self.delta(c, d))).collect())
            .collect()
    }

    /// Overwrites one table entry; used to build negative controls.
    pub fn set_delta(&mut self, c: usize, d: usize, w: Word) -> Result<()> {
        let n = self.num_chambers();
        if c >= n || d >= n {
            return Err(invalid("chamber index out of range"));
        }
        self.delta[c * n + d] = self.coxeter.reduce(&w)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thin_dihedral_buildings() {
        let b = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(3)), 100).unwrap();
        assert_eq!(b.num_chambers(), 6);
        assert_eq!(b.system().thickness(), vec![vec![2], vec![2]]);
        let b4 = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(4)), 100).unwrap();
        assert_eq!(b4.num_chambers(), 8);
        let stst = b4.coxeter().parse_word(&["s", "t", "s", "t"]).unwrap();
        let id = b4.system().index_of("1").unwrap();
        let top = b4.system().index_of("s.t.s.t").unwrap();
        assert_eq!(b4.delta(id, top), &b4.coxeter().reduce(&stst).unwrap());
        assert_eq!(b4.delta(id, top).len(), 4);
    }

    #[test]
    fn rank_one_thin_building() {
        let a1 = CoxeterMatrix::type_a(1);
        let b = Building::thin(&a1, 10).unwrap();
        assert_eq!(b.num_chambers(), 2);
        assert_eq!(b.system().panels(0).len(), 1);
    }

    #[test]
    fn thin_building_rejects_infinite_group() {
        let d_inf = CoxeterMatrix::dihedral(Order::Infinite);
        assert!(matches!(Building::thin(&d_inf, 50), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn fano_flags() {
        let b = Building::fano();
        assert_eq!(b.num_chambers(), 21);
        assert_eq!(b.system().thickness(), vec![vec![3], vec![3]]);
        assert_eq!(b.ball(0, 1).len(), 5);
        assert_eq!(b.residue(0, GenSet::singleton(0)).len(), 3);
        assert!(b.retraction(0)[0].is_empty());
        let d = b.system().neighbours(0, 0).next().unwrap();
        assert_eq!(b.delta(0, d).letters(), &[0]);
    }

    #[test]
    fn product_distance_is_componentwise() {
        let i3 = Building::thin(&CoxeterMatrix::dihedral(Order::Finite(3)), 100).unwrap();
        let a = i3.relabeled(vec!["a0".into(), "b0".into()]).unwrap();
        let b = i3.relabeled(vec!["a1".into(), "b1".into()]).unwrap();
        let p = Building::product(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(p.num_chambers(), 36);
        assert_eq!(p.rank(), 4);
        let (x, y) = (p.system().index_of("(1,1)").unwrap(), p.system().index_of("(s,s.t)").unwrap());
        assert_eq!(p.coxeter().word_string(p.delta(x, y)), "a0.a1.b1");
        assert!(Building::product(&[a.clone(), a]).is_err());
    }
}
