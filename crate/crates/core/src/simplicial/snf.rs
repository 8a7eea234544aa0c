//! Smith normal form over `Z` with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src], on columns `from..`
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for j in from..self.cols {
            let delta = q * &self.data[src * self.cols + j];
            if !delta.is_zero() {
                self.data[dst * self.cols + j] -= delta;
            }
        }
    }

    /// col[dst] -= q * col[src], on rows `from..`
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.rows {
            let delta = q * &self.data[i * self.cols + src];
            if !delta.is_zero() {
                self.data[i * self.cols + dst] -= delta;
            }
        }
    }

    /// Position of a nonzero entry of least absolute value in the lower-right
    /// block starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.get(bi, bj).abs()) {
                    best = Some((i, j));
                    if v.abs() == BigInt::from(1) {
                        return best;
                    }
                }
            }
        }
        best
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of `m`, all positive.
///
/// Elimination always pivots on an entry of least absolute value, so each
/// remainder step strictly shrinks the pivot.
pub fn invariant_factors(mut m: IntMatrix) -> Vec<BigInt> {
    let mut factors = Vec::new();
    let mut t = 0;
    while t < m.rows.min(m.cols) {
        let Some((pi, pj)) = m.min_pivot(t) else {
            break;
        };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        loop {
            let pivot = m.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m.rows {
                if m.get(i, t).is_zero() {
                    continue;
                }
                let q = m.get(i, t).div_floor(&pivot);
                m.sub_row(i, t, &q, t);
                if !m.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..m.cols {
                if m.get(t, j).is_zero() {
                    continue;
                }
                let q = m.get(t, j).div_floor(&pivot);
                m.sub_col(j, t, &q, t);
                if !m.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // move the smallest remainder in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..m.rows {
                    let v = m.get(i, t);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..m.cols {
                    let v = m.get(t, j);
                    if !v.is_zero() && v.abs() < m.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                m.swap_rows(t, best.0);
                m.swap_cols(t, best.1);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let offender = (t + 1..m.rows).find(|&i| {
                (t + 1..m.cols).any(|j| !m.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let minus_one = BigInt::from(-1);
                    m.sub_row(t, i, &minus_one, t);
                }
                None => break,
            }
        }
        factors.push(m.get(t, t).abs());
        t += 1;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn known_forms() {
        let m = IntMatrix::from_rows(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(invariant_factors(m), big(&[2, 6, 12]));
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(invariant_factors(m), big(&[1, 6]));
        assert!(invariant_factors(IntMatrix::zeros(3, 2)).is_empty());
    }

    fn det2(a: i64, b: i64, c: i64, d: i64) -> i64 {
        a * d - b * c
    }

    proptest! {
        #[test]
        fn factors_divide_and_match_2x2_invariants(a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
            let f = invariant_factors(IntMatrix::from_rows(vec![vec![a, b], vec![c, d]]));
            for w in f.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            // d1 = gcd of entries, d1*d2 = |det|
            let g = [a, b, c, d].iter().fold(0i64, |acc, &x| acc.gcd(&x));
            let det = det2(a, b, c, d).abs();
            match f.len() {
                0 => prop_assert_eq!(g, 0),
                1 => { prop_assert_eq!(&f[0], &BigInt::from(g)); prop_assert_eq!(det, 0); }
                _ => {
                    prop_assert_eq!(&f[0], &BigInt::from(g));
                    prop_assert_eq!(&f[0] * &f[1], BigInt::from(det));
                }
            }
        }
    }
}
