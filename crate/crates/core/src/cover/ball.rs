use std::collections::HashMap;

use crate::chambers::{verify_building, Building, VerifyOptions};
use crate::coxeter::Word;
use crate::error::{invalid, Error, Result};

use super::gallery::{Cover, Gallery};
use super::FoldingData;

pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug)]
pub struct BallOptions {
    /// Hard limit on the number of classes.
    pub class_cap: usize,
    /// Run [`verify_building`] on `C'` first and refuse on failure.
    pub verify_downstairs: bool,
}

impl Default for BallOptions {
    fn default() -> Self {
        Self {
            class_cap: DEFAULT_CLASS_CAP,
            verify_downstairs: true,
        }
    }
}

/// A chamber of the covering building: the flip class of a reduced gallery
/// from the base chamber, held by its least representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GalleryClass {
    /// Canonical word of the representative's type.
    pub weyl: Word,
    /// Chambers of `C'` along the representative.
    pub chambers: Vec<usize>,
}

impl GalleryClass {
    pub fn projection(&self) -> usize {
        *self.chambers.last().expect("galleries are nonempty")
    }

    pub fn gallery(&self) -> Gallery {
        Gallery {
            ty: self.weyl.clone(),
            chambers: self.chambers.clone(),
        }
    }

    fn from_canonical(g: Gallery) -> Self {
        Self {
            weyl: g.ty,
            chambers: g.chambers,
        }
    }
}

/// All classes of Weyl length at most `radius` around a base chamber, with
/// their panels.
#[derive(Clone, Debug)]
pub struct CoveredBall {
    cover: Cover,
    base: usize,
    radius: usize,
    classes: Vec<GalleryClass>,
    index: HashMap<GalleryClass, usize>,
    /// `panels[s]` partitions the class indices.
    panels: Vec<Vec<Vec<usize>>>,
    panel_of: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

fn partition_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    let mut parts: Vec<Vec<usize>> = groups.into_values().collect();
    parts.sort();
    parts
}

/// Builds the ball of the given radius around `base` in the building covering
/// `cprime` determined by `fd`.
pub fn build_ball(
    fd: &FoldingData,
    cprime: &Building,
    base: usize,
    radius: usize,
    opts: BallOptions,
) -> Result<CoveredBall> {
    if cprime.coxeter() != fd.target() {
        return Err(Error::InvalidFolding(
            "the building's Coxeter matrix differs from the folding target".into(),
        ));
    }
    if base >= cprime.num_chambers() {
        return Err(invalid(format!("base chamber {base} out of range")));
    }
    if opts.verify_downstairs {
        if let Some(v) = verify_building(cprime, VerifyOptions::default())?.violation() {
            return Err(Error::NotABuilding(format!(
                "{} fails at {:?}: {}",
                v.axiom, v.chambers, v.detail
            )));
        }
    }
    let cover = Cover {
        fd: fd.clone(),
        cprime: cprime.clone(),
    };
    let m = fd.surgered();
    let sys = cprime.system();
    let root = GalleryClass {
        weyl: Word::identity(),
        chambers: vec![base],
    };
    let mut classes = vec![root.clone()];
    let mut index = HashMap::from([(root, 0)]);
    let mut layer = vec![0];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &g in &layer {
            for s in 0..m.rank() {
                let w = &classes[g].weyl;
                if m.reduce(&w.appended(s))?.len() != w.len() + 1 {
                    continue;
                }
                let end = classes[g].projection();
                for d in sys.neighbours(fd.f(s), end).collect::<Vec<_>>() {
                    let mut rep = classes[g].gallery();
                    rep.ty.push(s);
                    rep.chambers.push(d);
                    let h = GalleryClass::from_canonical(cover.canonicalize(&rep)?);
                    if !index.contains_key(&h) {
                        if classes.len() >= opts.class_cap {
                            return Err(Error::BudgetExhausted {
                                what: "class",
                                budget: opts.class_cap as u64,
                            });
                        }
                        index.insert(h.clone(), classes.len());
                        next.push(classes.len());
                        classes.push(h);
                    }
                }
            }
        }
        layer = next;
    }
    let mut ball = CoveredBall {
        cover,
        base,
        radius,
        classes,
        index,
        panels: Vec::new(),
        panel_of: Vec::new(),
    };
    ball.panels = ball.derive_panels()?;
    ball.panel_of = panel_owners(&ball.panels, ball.classes.len());
    Ok(ball)
}

fn panel_owners(panels: &[Vec<Vec<usize>>], n: usize) -> Vec<Vec<usize>> {
    panels
        .iter()
        .map(|parts| {
            let mut owner = vec![usize::MAX; n];
            for (p, part) in parts.iter().enumerate() {
                for &x in part {
                    owner[x] = p;
                }
            }
            owner
        })
        .collect()
}

impl CoveredBall {
    /// Reassembles a ball from exported data. Every class must be a
    /// canonical gallery class; panels are taken as given.
    pub fn from_parts(
        fd: &FoldingData,
        cprime: &Building,
        base: usize,
        radius: usize,
        classes: Vec<GalleryClass>,
        panels: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let cover = Cover {
            fd: fd.clone(),
            cprime: cprime.clone(),
        };
        let n = classes.len();
        let mut index = HashMap::new();
        for (i, g) in classes.iter().enumerate() {
            let gal = g.gallery();
            if !cover.is_gallery(&gal) || gal.start() != base {
                return Err(invalid(format!("class {i} is not a gallery from the base chamber")));
            }
            if fd.surgered().reduce(&g.weyl)? != g.weyl {
                return Err(invalid(format!("class {i} has a weyl word that is not reduced")));
            }
            if g.weyl.len() > radius || cover.canonicalize(&gal)? != gal {
                return Err(invalid(format!("class {i} is not a canonical representative within the radius")));
            }
            if index.insert(g.clone(), i).is_some() {
                return Err(invalid(format!("class {i} is listed twice")));
            }
        }
        if panels.len() != fd.surgered().rank() {
            return Err(invalid("one panel partition per generator is required"));
        }
        for parts in &panels {
            let mut seen = vec![false; n];
            for &x in parts.iter().flatten() {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(invalid("panels do not partition the classes"));
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(invalid("panels do not partition the classes"));
            }
        }
        let panel_of = panel_owners(&panels, n);
        Ok(Self {
            cover,
            base,
            radius,
            classes,
            index,
            panels,
            panel_of,
        })
    }

    /// Two classes share an `s`-panel iff one is an `s`-extension of the
    /// other or both extend a common class by `s`.
    fn derive_panels(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let m = self.folding().surgered();
        let mut out = Vec::with_capacity(m.rank());
        for s in 0..m.rank() {
            let mut edges = Vec::new();
            for (i, g) in self.classes.iter().enumerate() {
                let longer = m.reduce(&g.weyl.appended(s))?.len() > g.weyl.len();
                if longer && g.weyl.len() == self.radius {
                    continue;
                }
                let ds: Vec<usize> = self
                    .downstairs()
                    .system()
                    .neighbours(self.folding().f(s), g.projection())
                    .collect();
                for d in ds {
                    let h = self.extend_class(g, s, d)?;
                    if let Some(&j) = self.index.get(&h) {
                        edges.push((i, j));
                    }
                }
            }
            out.push(partition_from_edges(self.classes.len(), &edges));
        }
        Ok(out)
    }

    pub fn cover(&self) -> &Cover {
        &self.cover
    }

    pub fn folding(&self) -> &FoldingData {
        &self.cover.fd
    }

    pub fn downstairs(&self) -> &Building {
        &self.cover.cprime
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn classes(&self) -> &[GalleryClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_index(&self, g: &GalleryClass) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn projection(&self, g: usize) -> usize {
        self.classes[g].projection()
    }

    pub fn panels(&self, s: usize) -> &[Vec<usize>] {
        &self.panels[s]
    }

    /// The `s`-panel of class `g`, within the ball.
    pub fn panel(&self, s: usize, g: usize) -> &[usize] {
        &self.panels[s][self.panel_of[s][g]]
    }

    /// Number of classes of each Weyl length `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radius + 1];
        for g in &self.classes {
            sizes[g.weyl.len()] += 1;
        }
        sizes
    }

    /// Indices of classes with Weyl length at most `k`.
    pub fn interior(&self, k: usize) -> Vec<usize> {
        (0..self.classes.len()).filter(|&g| self.classes[g].weyl.len() <= k).collect()
    }

    /// Label used in reports: the canonical word and the projection.
    pub fn class_label(&self, g: usize) -> String {
        let c = &self.classes[g];
        format!(
            "{}@{}",
            self.folding().surgered().word_string(&c.weyl),
            self.downstairs().system().label(c.projection())
        )
    }

    /// The class reached from `g` by one `s`-step to the downstairs chamber
    /// `d`. If `ws` is longer than `w` the step is appended; otherwise the
    /// representative is first flipped to a type ending in `s`, and the last
    /// step is dropped when it came from `d` and redirected to `d` otherwise.
    pub fn extend_class(&self, g: &GalleryClass, s: usize, d: usize) -> Result<GalleryClass> {
        let fd = self.folding();
        let m = fd.surgered();
        if s >= m.rank() {
            return Err(invalid(format!("generator index {s} out of range")));
        }
        let end = g.projection();
        if !self.downstairs().system().adjacent(fd.f(s), end, d) {
            return Err(invalid(format!(
                "{:?} is not {}-adjacent to {:?}",
                self.downstairs().system().label(d),
                m.label(s),
                self.downstairs().system().label(end)
            )));
        }
        let rep = g.gallery();
        let ws = m.reduce(&g.weyl.appended(s))?;
        let out = if ws.len() > g.weyl.len() {
            let mut ext = rep;
            ext.ty.push(s);
            ext.chambers.push(d);
            ext
        } else {
            let mut flipped = self
                .cover
                .flip_to_end_in(&rep, s)?
                .ok_or_else(|| Error::NotABuilding("no reduced expression ends in s".into()))?;
            let k = flipped.chambers.len();
            if flipped.chambers[k - 2] == d {
                flipped.ty = Word::from(flipped.ty.letters()[..flipped.ty.len() - 1].to_vec());
                flipped.chambers.pop();
            } else {
                flipped.chambers[k - 1] = d;
            }
            flipped
        };
        Ok(GalleryClass::from_canonical(self.cover.canonicalize(&out)?))
    }

    /// Weyl distance between two classes: the reduced type of the gallery
    /// that runs back from `g` to the base and out to `h`.
    pub fn delta(&self, g: usize, h: usize) -> Result<Word> {
        let path = self.classes[g].gallery().reversed().then(&self.classes[h].gallery());
        let reduced = self.cover.reduce(&path)?;
        debug_assert_eq!(reduced.end(), self.classes[h].projection());
        self.folding().surgered().reduce(&reduced.ty)
    }
}
