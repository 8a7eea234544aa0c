use crate::error::{invalid, Result};

use super::SimplicialComplex;

/// A finite strict partial order on labelled elements.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    less: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from explicit strict-order pairs `(a, b)` meaning `a < b`.
    /// The relation must already be irreflexive and transitive.
    pub fn new(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut less = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(invalid(format!("relation pair ({a}, {b}) out of range")));
            }
            less[a][b] = true;
        }
        Self::checked(labels, less)
    }

    pub fn from_fn(labels: Vec<String>, lt: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let less = (0..n).map(|a| (0..n).map(|b| lt(a, b)).collect()).collect();
        Self::checked(labels, less)
    }

    fn checked(labels: Vec<String>, less: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        for a in 0..n {
            if less[a][a] {
                return Err(invalid(format!("relation is not irreflexive at {:?}", labels[a])));
            }
            for b in 0..n {
                if !less[a][b] {
                    continue;
                }
                for c in 0..n {
                    if less[b][c] && !less[a][c] {
                        return Err(invalid(format!(
                            "relation is not transitive: {:?} < {:?} < {:?}",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { labels, less })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    /// Elements `>= a`.
    pub fn up_set(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| b == a || self.less[a][b]).collect()
    }

    /// Pairs `(a, b)` with `b` covering `a`.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| self.less[a][b] && !(0..n).any(|c| self.less[a][c] && self.less[c][b]))
                    .collect()
            })
            .collect()
    }

    /// The order complex `|P|`: simplices are the nonempty chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let n = self.len();
        let covers = self.covers();
        // maximal chains are saturated chains from a minimal element
        let mut chains = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..n)
            .filter(|&a| !(0..n).any(|b| self.less[b][a]))
            .map(|a| vec![a])
            .collect();
        while let Some(chain) = stack.pop() {
            let top = *chain.last().expect("chains are nonempty");
            if covers[top].is_empty() {
                chains.push(chain);
                continue;
            }
            for &b in &covers[top] {
                let mut c = chain.clone();
                c.push(b);
                stack.push(c);
            }
        }
        SimplicialComplex::from_facets(self.labels.clone(), chains)
            .expect("chains use valid indices")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("p{i}")).collect()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(Poset::new(labels(2), &[(0, 0)]).is_err());
        assert!(Poset::new(labels(3), &[(0, 1), (1, 2)]).is_err());
        assert!(Poset::new(labels(3), &[(0, 1), (1, 2), (0, 2)]).is_ok());
    }

    #[test]
    fn order_complex_examples() {
        let chain = Poset::new(labels(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(chain.order_complex().f_vector(), vec![3, 3, 1]);

        let anti = Poset::new(labels(3), &[]).unwrap();
        assert_eq!(anti.order_complex().f_vector(), vec![3]);

        // Boolean lattice on {s, t}: 0 = {}, 1 = {s}, 2 = {t}, 3 = {s,t}
        let boolean = Poset::new(labels(4), &[(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]).unwrap();
        let k = boolean.order_complex();
        assert_eq!(k.f_vector(), vec![4, 5, 2]);
        assert!(k.contains(&[0, 3]));
    }
}
