use std::collections::HashMap;

use crate::coxeter::Word;
use crate::error::{invalid, Result};
use crate::verdict::{Axiom, Verdict};

use super::CoveredBall;

/// Memoised Weyl distances between classes of one ball.
struct Distances<'a> {
    ball: &'a CoveredBall,
    table: HashMap<(usize, usize), Word>,
}

impl Distances<'_> {
    fn get(&mut self, g: usize, h: usize) -> Result<&Word> {
        if !self.table.contains_key(&(g, h)) {
            let w = self.ball.delta(g, h)?;
            self.table.insert((g, h), w);
        }
        Ok(&self.table[&(g, h)])
    }
}

/// Checks the building axioms and the covering properties on the classes of
/// Weyl length at most `interior`, which must be less than the radius.
///
/// In order: WD1, WD2 and WD3 with adjacency read from the stored panels;
/// each panel maps bijectively onto a panel of `C'`; each spherical residue
/// of a face type of `L` that fits in the ball maps bijectively onto a
/// residue of `C'`; flip orbits of representatives stay in their class and
/// realize every reduced expression; the interior projects onto the ball of
/// the same radius in `C'`.
pub fn verify_cover(ball: &CoveredBall, interior: usize) -> Result<Verdict> {
    if interior >= ball.radius() {
        return Err(invalid(format!(
            "interior radius {interior} must be less than the ball radius {}",
            ball.radius()
        )));
    }
    let fd = ball.folding();
    let m = fd.surgered();
    let down = ball.downstairs();
    let sys = down.system();
    let inner = ball.interior(interior);
    let name = |g: usize| ball.class_label(g);
    let ws = |w: &Word| m.word_string(w);
    let mut dist = Distances {
        ball,
        table: HashMap::new(),
    };

    for &c in &inner {
        for &d in &inner {
            let w = dist.get(c, d)?;
            if w.is_empty() != (c == d) {
                return Ok(Verdict::fail(
                    Axiom::Wd1,
                    vec![name(c), name(d)],
                    format!("δ = {}", ws(w)),
                ));
            }
        }
    }

    for &c in &inner {
        for &d in &inner {
            let w = dist.get(c, d)?.clone();
            for s in 0..m.rank() {
                let sw = m.reduce(&w.prepended(s))?;
                let longer = sw.len() > w.len();
                let mut witnessed = false;
                for &x in ball.panel(s, c) {
                    if x == c {
                        continue;
                    }
                    let got = dist.get(x, d)?;
                    let ok = if longer { got == &sw } else { got == &sw || got == &w };
                    if !ok {
                        return Ok(Verdict::fail(
                            Axiom::Wd2,
                            vec![name(x), name(c), name(d)],
                            format!(
                                "{}-adjacent, δ(C, D) = {}, δ(C', D) = {}, expected {}",
                                m.label(s),
                                ws(&w),
                                ws(got),
                                if longer { ws(&sw) } else { format!("{} or {}", ws(&sw), ws(&w)) }
                            ),
                        ));
                    }
                    witnessed |= got == &sw;
                }
                if !witnessed {
                    return Ok(Verdict::fail(
                        Axiom::Wd3,
                        vec![name(c), name(d)],
                        format!("no {}-adjacent C' with δ(C', D) = {}", m.label(s), ws(&sw)),
                    ));
                }
            }
        }
    }

    for &c in &inner {
        for s in 0..m.rank() {
            let mut up: Vec<usize> = ball.panel(s, c).iter().map(|&x| ball.projection(x)).collect();
            up.sort_unstable();
            let downstairs = sys.panel(fd.f(s), ball.projection(c));
            if up != downstairs {
                return Ok(Verdict::fail(
                    Axiom::PanelSize,
                    vec![name(c)],
                    format!(
                        "{}-panel projects to {:?}, downstairs panel is {:?}",
                        m.label(s),
                        sys.labels(&up),
                        sys.labels(downstairs)
                    ),
                ));
            }
        }
    }

    let spherical: Vec<_> = fd
        .face_types()
        .into_iter()
        .filter(|&t| t.len() >= 2 && m.is_spherical(t))
        .map(|t| Ok((t, m.longest_length(t, usize::MAX)?)))
        .collect::<Result<_>>()?;
    for &c in &inner {
        let len = ball.classes()[c].weyl.len();
        for &(t, top) in &spherical {
            if len + top > ball.radius() {
                continue;
            }
            let residue = ball_residue(ball, c, t);
            let mut image: Vec<usize> = residue.iter().map(|&x| ball.projection(x)).collect();
            image.sort_unstable();
            let expected = sys.residue(ball.projection(c), fd.image(t));
            if image != expected {
                return Ok(Verdict::fail(
                    Axiom::ResidueBijection,
                    vec![name(c)],
                    format!(
                        "residue of type {} has {} classes over {} distinct chambers; downstairs residue has {}",
                        crate::coxeter::subset_label(m.generators(), t),
                        residue.len(),
                        {
                            let mut u = image.clone();
                            u.dedup();
                            u.len()
                        },
                        expected.len()
                    ),
                ));
            }
        }
    }

    let cover = ball.cover();
    for &c in &inner {
        let class = &ball.classes()[c];
        let rep = class.gallery();
        let orbit = cover.flip_orbit(&rep)?;
        let expressions = m.reduced_expressions(&class.weyl)?.len();
        if orbit.len() != expressions {
            return Ok(Verdict::fail(
                Axiom::FlipClosure,
                vec![name(c)],
                format!("flip orbit has {} galleries, the element has {expressions} reduced expressions", orbit.len()),
            ));
        }
        for g in &orbit {
            if g.end() != class.projection() || cover.canonicalize(g)? != rep {
                return Ok(Verdict::fail(
                    Axiom::FlipClosure,
                    vec![name(c)],
                    format!("gallery of type {} leaves the class", ws(&g.ty)),
                ));
            }
        }
    }

    let mut image: Vec<usize> = inner.iter().map(|&g| ball.projection(g)).collect();
    image.sort_unstable();
    image.dedup();
    let expected = down.ball(ball.base(), interior);
    if image != expected {
        return Ok(Verdict::fail(
            Axiom::Deck,
            vec![sys.label(ball.base()).to_string()],
            format!(
                "interior projects onto {} chambers, the ball of radius {interior} downstairs has {}",
                image.len(),
                expected.len()
            ),
        ));
    }
    Ok(Verdict::Pass)
}

/// The `T`-residue of class `c` inside the ball.
fn ball_residue(ball: &CoveredBall, c: usize, t: crate::coxeter::GenSet) -> Vec<usize> {
    let mut seen = vec![false; ball.len()];
    seen[c] = true;
    let mut stack = vec![c];
    let mut out = vec![c];
    while let Some(x) = stack.pop() {
        for s in t.iter() {
            for &y in ball.panel(s, x) {
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    stack.push(y);
                }
            }
        }
    }
    out.sort_unstable();
    out
}
