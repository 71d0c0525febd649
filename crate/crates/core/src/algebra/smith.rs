//! Integer matrices and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixZ {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl MatrixZ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixZ { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
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
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j].clone();
            if !s.is_zero() {
                self.data[dst * self.cols + j] -= q * s;
            }
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = self.data[i * self.cols + src].clone();
            if !s.is_zero() {
                self.data[i * self.cols + dst] -= q * s;
            }
        }
    }
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form, all positive.
pub fn smith_invariants(m: &MatrixZ) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = a.get(i, j);
                if !v.is_zero() && best.map_or(true, |(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let piv = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                let (q, r) = a.get(i, t).div_mod_floor(&piv);
                if !q.is_zero() {
                    a.row_axpy(i, t, &q);
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let (q, r) = a.get(t, j).div_mod_floor(&piv);
                if !q.is_zero() {
                    a.col_axpy(j, t, &q);
                }
                if !r.is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility of the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !a.get(i, j).is_multiple_of(&piv));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = BigInt::one();
                        a.row_axpy(t, i, &-one);
                        continue;
                    }
                }
            }
            // move the smallest remainder into the pivot slot
            let mut best = (t, t);
            for i in t..rows {
                let v = a.get(i, t);
                if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                let v = a.get(t, j);
                if !v.is_zero() && v.abs() < a.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            a.swap_rows(t, best.0);
            a.swap_cols(t, best.1);
        }
        diag.push(a.get(t, t).abs());
        t += 1;
    }
    diag
}

pub fn rank_z(m: &MatrixZ) -> usize {
    smith_invariants(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_invariants(&MatrixZ::from_rows(rows))
            .into_iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_needs_gcd_fixup() {
        assert_eq!(inv(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(inv(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }

    #[test]
    fn classic_example() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(inv(&m), vec![2, 6, 12]);
    }

    #[test]
    fn rank_deficient() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(inv(&m), vec![1]);
        assert_eq!(rank_z(&MatrixZ::zeros(3, 2)), 0);
    }
}
