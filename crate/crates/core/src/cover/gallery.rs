//! Galleries upstairs, stored as a type over `S` and the chambers of `C'`
//! they pass through, with flips and reduction carried out downstairs.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::chambers::Building;
use crate::coxeter::{Order, Word};
use crate::error::{Error, Result};

use super::FoldingData;

/// A gallery of type `ty` through chambers of `C'`; consecutive chambers are
/// distinct and `f(ty[i])`-adjacent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gallery {
    pub ty: Word,
    pub chambers: Vec<usize>,
}

impl Gallery {
    pub fn trivial(c: usize) -> Self {
        Self {
            ty: Word::identity(),
            chambers: vec![c],
        }
    }

    pub fn start(&self) -> usize {
        self.chambers[0]
    }

    pub fn end(&self) -> usize {
        *self.chambers.last().expect("galleries are nonempty")
    }

    pub fn len(&self) -> usize {
        self.ty.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ty.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut chambers = self.chambers.clone();
        chambers.reverse();
        Self {
            ty: self.ty.inverse(),
            chambers,
        }
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn then(&self, other: &Gallery) -> Self {
        debug_assert_eq!(self.end(), other.start());
        let mut chambers = self.chambers.clone();
        chambers.extend_from_slice(&other.chambers[1..]);
        Self {
            ty: self.ty.concat(&other.ty),
            chambers,
        }
    }
}

/// A folding together with the building `C'` it lives over.
#[derive(Clone, Debug)]
pub struct Cover {
    pub(crate) fd: FoldingData,
    pub(crate) cprime: Building,
}

impl Cover {
    pub fn folding(&self) -> &FoldingData {
        &self.fd
    }

    pub fn downstairs(&self) -> &Building {
        &self.cprime
    }

    pub fn is_gallery(&self, g: &Gallery) -> bool {
        let sys = self.cprime.system();
        g.chambers.len() == g.ty.len() + 1
            && g.ty.iter().all(|s| s < self.fd.surgered().rank())
            && g.chambers.iter().all(|&c| c < sys.num_chambers())
            && g.chambers
                .windows(2)
                .zip(g.ty.iter())
                .all(|(p, s)| sys.adjacent(self.fd.f(s), p[0], p[1]))
    }

    /// The unique gallery downstairs from `from` to `to` whose type is the
    /// image of `ty`, assuming `δ'(from, to)` is that image and it is reduced.
    fn unique_gallery(&self, from: usize, to: usize, ty: &[usize]) -> Result<Vec<usize>> {
        let sys = self.cprime.system();
        let target = self.fd.target();
        let image: Vec<usize> = ty.iter().map(|&s| self.fd.f(s)).collect();
        let mut out = vec![from];
        let mut current = from;
        for j in 0..image.len() {
            let rest = target.reduce(&Word::from(image[j + 1..].to_vec()))?;
            let mut next = sys
                .neighbours(image[j], current)
                .filter(|&x| self.cprime.delta(x, to) == &rest);
            let x = next.next().ok_or_else(|| {
                Error::NotABuilding(format!(
                    "no gallery of type {} from {:?} to {:?}",
                    target.word_string(&Word::from(image.clone())),
                    sys.label(from),
                    sys.label(to)
                ))
            })?;
            if next.next().is_some() {
                return Err(Error::NotABuilding(format!(
                    "two galleries of reduced type from {:?} to {:?}",
                    sys.label(from),
                    sys.label(to)
                )));
            }
            out.push(x);
            current = x;
        }
        Ok(out)
    }

    /// Every gallery obtained from `g` by one flip.
    pub fn flips(&self, g: &Gallery) -> Result<Vec<Gallery>> {
        let m = self.fd.surgered();
        let w = g.ty.letters();
        let mut out = Vec::new();
        for i in 0..w.len().saturating_sub(1) {
            let (s, t) = (w[i], w[i + 1]);
            if s == t {
                continue;
            }
            let Order::Finite(k) = m.m(s, t) else {
                continue;
            };
            let k = k as usize;
            if i + k > w.len() || !(0..k).all(|j| w[i + j] == if j % 2 == 0 { s } else { t }) {
                continue;
            }
            let flipped: Vec<usize> = (0..k).map(|j| if j % 2 == 0 { t } else { s }).collect();
            let path = self.unique_gallery(g.chambers[i], g.chambers[i + k], &flipped)?;
            let mut ty = w.to_vec();
            ty[i..i + k].copy_from_slice(&flipped);
            let mut chambers = g.chambers.clone();
            chambers[i..=i + k].copy_from_slice(&path);
            out.push(Gallery {
                ty: Word::from(ty),
                chambers,
            });
        }
        Ok(out)
    }

    /// The flip orbit of `g`, sorted.
    pub fn flip_orbit(&self, g: &Gallery) -> Result<Vec<Gallery>> {
        let budget = self.fd.surgered().budget();
        let mut seen: BTreeSet<Gallery> = BTreeSet::new();
        seen.insert(g.clone());
        let mut queue = VecDeque::from([g.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.flips(&x)? {
                if seen.insert(y.clone()) {
                    if seen.len() as u64 > budget {
                        return Err(Error::BudgetExhausted {
                            what: "flip orbit",
                            budget,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Least member of the flip orbit by type, then chambers.
    pub fn canonicalize(&self, g: &Gallery) -> Result<Gallery> {
        Ok(self.flip_orbit(g)?.swap_remove(0))
    }

    /// A member of the flip orbit whose type ends in `s`, if any.
    pub fn flip_to_end_in(&self, g: &Gallery, s: usize) -> Result<Option<Gallery>> {
        Ok(self.flip_orbit(g)?.into_iter().find(|x| x.ty.last() == Some(s)))
    }

    /// Shortens `g` to a gallery of reduced type with the same endpoints, by
    /// flips and by collapsing two steps inside one panel: back-and-forth
    /// steps cancel, otherwise they merge into one step.
    pub fn reduce(&self, g: &Gallery) -> Result<Gallery> {
        let budget = self.fd.surgered().budget();
        let mut steps = 0u64;
        let mut current = g.clone();
        'restart: loop {
            let mut seen: HashMap<Gallery, ()> = HashMap::new();
            seen.insert(current.clone(), ());
            let mut queue = VecDeque::from([current.clone()]);
            while let Some(x) = queue.pop_front() {
                steps += 1;
                if steps > budget {
                    return Err(Error::BudgetExhausted {
                        what: "gallery reduction",
                        budget,
                    });
                }
                if let Some(j) = x.ty.letters().windows(2).position(|p| p[0] == p[1]) {
                    current = collapse(&x, j);
                    continue 'restart;
                }
                for y in self.flips(&x)? {
                    if !seen.contains_key(&y) {
                        seen.insert(y.clone(), ());
                        queue.push_back(y);
                    }
                }
            }
            let best = seen.into_keys().min().expect("orbit contains the start");
            return Ok(best);
        }
    }
}

/// Collapses the steps `j` and `j + 1`, which have the same type.
fn collapse(g: &Gallery, j: usize) -> Gallery {
    let mut ty = g.ty.letters().to_vec();
    let mut chambers = g.chambers.clone();
    if chambers[j] == chambers[j + 2] {
        ty.drain(j..j + 2);
        chambers.drain(j + 1..j + 3);
    } else {
        ty.remove(j + 1);
        chambers.remove(j + 1);
    }
    Gallery {
        ty: Word::from(ty),
        chambers,
    }
}
