//! Dense matrices over F_q and exact rank by Gaussian elimination.

use std::fmt;

use super::field::{FieldSpec, Fq};

#[derive(Clone, PartialEq, Eq)]
pub struct MatrixFq {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl MatrixFq {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        MatrixFq { rows, cols, data: vec![Fq::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fq>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatrixFq { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Fq>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Fq::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<Fq> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`, scaled by `sign`.
    pub fn add_block(&mut self, k: &FieldSpec, r0: usize, c0: usize, block: &MatrixFq, sign: Fq) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let v = block.get(i, j);
                if !v.is_zero() {
                    let cur = self.get(r0 + i, c0 + j);
                    self.set(r0 + i, c0 + j, k.add(cur, k.mul(sign, v)));
                }
            }
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> MatrixFq {
        let mut m = MatrixFq::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn mul(&self, k: &FieldSpec, other: &MatrixFq) -> MatrixFq {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = MatrixFq::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j);
                        out.set(i, j, k.add(cur, k.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self, k: &FieldSpec) -> usize {
        rank_fq(k, self)
    }

    pub fn nullity(&self, k: &FieldSpec) -> usize {
        self.cols - self.rank(k)
    }
}

impl fmt::Debug for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixFq {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Row rank over k, exact.
pub fn rank_fq(k: &FieldSpec, m: &MatrixFq) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    if k.degree() == 1 {
        return rank_prime(k.characteristic(), m);
    }
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a.get(i, col).is_zero()) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.data.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = k.inv(a.get(rank, col)).expect("pivot is nonzero");
        for i in rank + 1..rows {
            let f = a.get(i, col);
            if f.is_zero() {
                continue;
            }
            let factor = k.mul(f, inv);
            for j in col..cols {
                let v = a.get(rank, j);
                if !v.is_zero() {
                    let cur = a.get(i, j);
                    a.set(i, j, k.sub(cur, k.mul(factor, v)));
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn rank_prime(p: u32, m: &MatrixFq) -> usize {
    let p = p as u64;
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<u64> = m.data.iter().map(|v| v.c[0] as u64).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| a[i * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(a[rank * cols + col], p);
        // normalize pivot row
        for j in col..cols {
            a[rank * cols + j] = a[rank * cols + j] * inv % p;
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &head[rank * cols..];
        for row in tail.chunks_exact_mut(cols) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for j in col..cols {
                let v = pivot_row[j];
                if v != 0 {
                    row[j] = (row[j] + nf * v) % p;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(k: &FieldSpec, rows: &[&[i64]]) -> MatrixFq {
        MatrixFq::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| k.from_int(v)).collect()).collect(),
        )
    }

    #[test]
    fn rank_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(MatrixFq::identity(3).rank(&f2), 3);
        assert_eq!(mat(&f2, &[&[1, 1], &[1, 1]]).rank(&f2), 1);
        assert_eq!(MatrixFq::zeros(4, 5).rank(&f2), 0);
        assert_eq!(MatrixFq::zeros(0, 5).rank(&f2), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 3: singular exactly in characteristic 3
        let rows: &[&[i64]] = &[&[1, 1], &[1, -2]];
        let f3 = FieldSpec::prime(3).unwrap();
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(mat(&f3, rows).rank(&f3), 1);
        assert_eq!(mat(&f5, rows).rank(&f5), 2);
    }

    #[test]
    fn extension_field_rank() {
        let f4 = FieldSpec::quadratic(2).unwrap();
        let u = f4.generator();
        let u2 = f4.mul(u, u);
        // rows (1, u) and (u, u^2) are proportional
        let m = MatrixFq::from_rows(vec![vec![Fq::ONE, u], vec![u, u2]]);
        assert_eq!(m.rank(&f4), 1);
        let m = MatrixFq::from_rows(vec![vec![Fq::ONE, u], vec![u, Fq::ONE]]);
        assert_eq!(m.rank(&f4), 2);
    }
}
