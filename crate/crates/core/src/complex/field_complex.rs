//! Bounded complexes of finite-dimensional vector spaces over F_q.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{FieldSpec, MatrixFq};
use crate::error::{Error, Result};

/// A complex with spaces in degrees `lo..lo+dims.len()`. The differential out of
/// degree j lands in degree j + step (step = +1 for cochain, −1 for chain complexes).
#[derive(Clone, Debug)]
pub struct FieldComplex {
    pub k: FieldSpec,
    pub lo: i32,
    pub step: i32,
    pub dims: Vec<usize>,
    /// Differential keyed by source degree; missing entries are zero maps.
    pub maps: BTreeMap<i32, MatrixFq>,
}

impl FieldComplex {
    pub fn new(k: FieldSpec, lo: i32, step: i32, dims: Vec<usize>) -> Self {
        assert!(step == 1 || step == -1);
        FieldComplex { k, lo, step, dims, maps: BTreeMap::new() }
    }

    pub fn degrees(&self) -> std::ops::Range<i32> {
        self.lo..self.lo + self.dims.len() as i32
    }

    pub fn dim(&self, j: i32) -> usize {
        if self.degrees().contains(&j) {
            self.dims[(j - self.lo) as usize]
        } else {
            0
        }
    }

    pub fn set_map(&mut self, source: i32, m: MatrixFq) -> Result<()> {
        let (r, c) = (self.dim(source + self.step), self.dim(source));
        if m.rows() != r || m.cols() != c {
            return Err(Error::MatrixShape { expected: (r, c), got: (m.rows(), m.cols()) });
        }
        self.maps.insert(source, m);
        Ok(())
    }

    pub fn rank_out(&self, j: i32) -> usize {
        self.maps.get(&j).map_or(0, |m| m.rank(&self.k))
    }

    /// d∘d = 0 in every degree; the first offending source degree is reported.
    pub fn check_square_zero(&self) -> Result<()> {
        for (&j, m) in &self.maps {
            if let Some(next) = self.maps.get(&(j + self.step)) {
                if !next.mul(&self.k, m).is_zero() {
                    return Err(Error::NotAComplex(j));
                }
            }
        }
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|j| if j.rem_euclid(2) == 0 { self.dim(j) as i64 } else { -(self.dim(j) as i64) })
            .sum()
    }
}

/// Nonzero (degree, rank) pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub ranks: Vec<(i32, usize)>,
}

impl HomologyProfile {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i32, usize)>) -> Self {
        let mut ranks: Vec<_> = pairs.into_iter().filter(|p| p.1 != 0).collect();
        ranks.sort_unstable();
        HomologyProfile { ranks }
    }

    pub fn rank(&self, j: i32) -> usize {
        self.ranks.iter().find(|p| p.0 == j).map_or(0, |p| p.1)
    }

    pub fn total(&self) -> usize {
        self.ranks.iter().map(|p| p.1).sum()
    }

    /// True when every nonzero rank sits in degree j.
    pub fn concentrated_in(&self, j: i32) -> bool {
        self.ranks.iter().all(|p| p.0 == j)
    }
}

/// rank H^j = dim_j − rank(d out of j) − rank(d into j).
pub fn cohomology(c: &FieldComplex) -> Result<HomologyProfile> {
    c.check_square_zero()?;
    let ranks: BTreeMap<i32, usize> = c.maps.iter().map(|(&j, m)| (j, m.rank(&c.k))).collect();
    let out = c.degrees().map(|j| {
        let r_out = ranks.get(&j).copied().unwrap_or(0);
        let r_in = ranks.get(&(j - c.step)).copied().unwrap_or(0);
        (j, c.dim(j) - r_out - r_in)
    });
    Ok(HomologyProfile::from_pairs(out))
}
