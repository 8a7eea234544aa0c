//! Finiteness of special subgroups by matching connected components of the
//! Coxeter diagram against the finite irreducible types.

use std::fmt;

use super::{CoxeterMatrix, GenSet, Order};

/// A finite irreducible Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Rank two with `m(s,t) = m`.
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) => n,
            FiniteType::E6 => 6,
            FiniteType::E7 => 7,
            FiniteType::E8 => 8,
            FiniteType::F4 | FiniteType::H4 => 4,
            FiniteType::H3 => 3,
            FiniteType::I2(_) => 2,
        }
    }

    /// Group order, when it fits in a `u128`.
    pub fn order(self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |a, k| a.checked_mul(k));
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            FiniteType::D(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            FiniteType::E6 => Some(51_840),
            FiniteType::E7 => Some(2_903_040),
            FiniteType::E8 => Some(696_729_600),
            FiniteType::F4 => Some(1_152),
            FiniteType::H3 => Some(120),
            FiniteType::H4 => Some(14_400),
            FiniteType::I2(m) => Some(2 * m as u128),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E6 => f.write_str("E6"),
            FiniteType::E7 => f.write_str("E7"),
            FiniteType::E8 => f.write_str("E8"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H3 => f.write_str("H3"),
            FiniteType::H4 => f.write_str("H4"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl CoxeterMatrix {
    /// Connected components of the Coxeter diagram restricted to `subset`
    /// (edges where `m(s,t) >= 3`, including infinity).
    pub fn diagram_components(&self, subset: GenSet) -> Vec<GenSet> {
        let mut left = subset;
        let mut comps = Vec::new();
        while let Some(start) = left.iter().next() {
            let mut comp = GenSet::singleton(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for t in subset.iter() {
                    if !comp.contains(t) && self.m(s, t) != Order::Finite(2) && s != t {
                        comp.insert(t);
                        stack.push(t);
                    }
                }
            }
            left = GenSet::from_bits(left.bits() & !comp.bits());
            comps.push(comp);
        }
        comps
    }

    /// Types of the irreducible components of `W_T`, or `None` when `W_T` is
    /// infinite.
    pub fn finite_type(&self, subset: GenSet) -> Option<Vec<FiniteType>> {
        self.diagram_components(subset)
            .into_iter()
            .map(|c| self.component_type(c))
            .collect()
    }

    /// Whether the special subgroup `W_T` is finite.
    pub fn is_spherical(&self, subset: GenSet) -> bool {
        self.finite_type(subset).is_some()
    }

    fn component_type(&self, comp: GenSet) -> Option<FiniteType> {
        let verts: Vec<usize> = comp.iter().collect();
        let n = verts.len();
        if n == 1 {
            return Some(FiniteType::A(1));
        }
        let mut edges = Vec::new();
        for (i, &s) in verts.iter().enumerate() {
            for &t in &verts[i + 1..] {
                match self.m(s, t) {
                    Order::Finite(2) => {}
                    Order::Finite(m) => edges.push((s, t, m)),
                    Order::Infinite => return None,
                }
            }
        }
        if n == 2 {
            return Some(FiniteType::I2(edges[0].2));
        }
        // a connected diagram with n - 1 edges is a tree
        if edges.len() != n - 1 {
            return None;
        }
        if edges.iter().any(|&(_, _, m)| m > 5) {
            return None;
        }
        let degree = |v: usize| edges.iter().filter(|&&(a, b, _)| a == v || b == v).count();
        let max_degree = verts.iter().map(|&v| degree(v)).max().unwrap_or(0);
        let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
        match heavy.as_slice() {
            [] => {
                if max_degree <= 2 {
                    return Some(FiniteType::A(n));
                }
                let branches: Vec<usize> =
                    verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
                if max_degree > 3 || branches.len() != 1 {
                    return None;
                }
                let mut arms = self.arm_lengths(branches[0], &edges);
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Some(FiniteType::D(n)),
                    [1, 2, 2] => Some(FiniteType::E6),
                    [1, 2, 3] => Some(FiniteType::E7),
                    [1, 2, 4] => Some(FiniteType::E8),
                    _ => None,
                }
            }
            [&(a, b, m)] => {
                if max_degree > 2 {
                    return None;
                }
                let at_end = degree(a) == 1 || degree(b) == 1;
                match (m, at_end) {
                    (4, true) => Some(FiniteType::B(n)),
                    (4, false) if n == 4 => Some(FiniteType::F4),
                    (5, true) if n == 3 => Some(FiniteType::H3),
                    (5, true) if n == 4 => Some(FiniteType::H4),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn arm_lengths(&self, centre: usize, edges: &[(usize, usize, u32)]) -> Vec<usize> {
        let neighbours = |v: usize| {
            edges
                .iter()
                .filter_map(move |&(a, b, _)| match (a == v, b == v) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
        };
        neighbours(centre)
            .map(|first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                loop {
                    let next: Vec<usize> = neighbours(cur).filter(|&x| x != prev).collect();
                    match next.as_slice() {
                        [x] => {
                            prev = cur;
                            cur = *x;
                            len += 1;
                        }
                        _ => break len,
                    }
                }
            })
            .collect()
    }
}
