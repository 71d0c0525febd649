//! Homology of the bar complex and of its associated graded for the monomial order.

use std::collections::BTreeMap;

use serde::Serialize;

use super::complex::{bar_complex, BarComplexOverK, BarTuple};
use crate::algebra::FieldSpec;
use crate::complex::{cohomology, complex_dims, expected_top_rank, FieldComplex, HomologyProfile};
use crate::error::{Error, Result};
use crate::gamma::{all_words, Word};

fn concat(t: &BarTuple) -> Word {
    Word(t.iter().flat_map(|w| w.letters().iter().copied()).collect())
}

pub fn bar_homology(k: FieldSpec, r: u32) -> Result<HomologyProfile> {
    cohomology(&bar_complex(k, r)?.complex)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarReport {
    pub p: u32,
    pub r: u32,
    pub dims: Vec<usize>,
    pub modular_dims: Vec<usize>,
    pub homology: HomologyProfile,
    pub expected_rank: usize,
}

impl BarReport {
    pub fn pass(&self) -> bool {
        self.dims == self.modular_dims
            && self.homology.concentrated_in(self.r as i32)
            && self.homology.rank(self.r as i32) == self.expected_rank
    }
}

pub fn bar_report(k: FieldSpec, r: u32) -> Result<BarReport> {
    let p = k.characteristic();
    let bar = bar_complex(k, r)?;
    let homology = cohomology(&bar.complex)?;
    let modular = complex_dims(p, r);
    // the modular complex has a zero slot in degree 0 for r ≥ 1
    let modular_dims = if r == 0 { modular } else { modular[1..].to_vec() };
    Ok(BarReport {
        p,
        r,
        dims: bar.dims(),
        modular_dims,
        homology,
        expected_rank: expected_top_rank(p, r),
    })
}

/// One associated graded piece gr_I.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrPiece {
    pub word: Word,
    /// 0-based descent positions (i ≠ 0 followed by 0).
    pub descents: Vec<usize>,
    /// Dimension in chain degrees 1..=r.
    pub dims: Vec<usize>,
    /// Number of ways to cut I into q admissible segments, q = 1..=r.
    pub model_dims: Vec<usize>,
    pub homology: HomologyProfile,
    pub expected_rank: usize,
}

impl GrPiece {
    pub fn pass(&self) -> bool {
        let r = self.word.len() as i32;
        self.dims == self.model_dims
            && self.homology.concentrated_in(r)
            && self.homology.rank(r) == self.expected_rank
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrSummary {
    pub p: u32,
    pub r: u32,
    /// Every differential component goes from bucket I to a bucket ≤ I.
    pub filtration_ok: bool,
    pub pieces: Vec<GrPiece>,
    pub gr_rank_sum: usize,
    pub total_rank: usize,
}

impl GrSummary {
    pub fn pass(&self) -> bool {
        self.filtration_ok
            && self.pieces.iter().all(GrPiece::pass)
            && self.gr_rank_sum == self.total_rank
    }

    pub fn piece(&self, w: &Word) -> Option<&GrPiece> {
        self.pieces.iter().find(|g| &g.word == w)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Splittings of a length-r word into q admissible segments: every descent must be
/// a cut, the other gaps are free.
pub fn face_model_dim(w: &Word, q: usize) -> usize {
    let r = w.len();
    let t = w.descents().len();
    if q == 0 || r == 0 || q - 1 < t {
        return usize::from(r == 0 && q == 0);
    }
    binomial(r - 1 - t, q - 1 - t)
}

fn summarize(bar: &BarComplexOverK, k: FieldSpec) -> Result<GrSummary> {
    let r = bar.r;
    let total_rank = cohomology(&bar.complex)?.total();
    // bucket index lists per degree
    let mut buckets: BTreeMap<Word, Vec<Vec<usize>>> = BTreeMap::new();
    for (qi, basis) in bar.bases.iter().enumerate() {
        for (idx, t) in basis.iter().enumerate() {
            buckets.entry(concat(t)).or_insert_with(|| vec![Vec::new(); bar.bases.len()])[qi].push(idx);
        }
    }
    let mut filtration_ok = true;
    for (&src, m) in &bar.complex.maps {
        let (s, t) = (&bar.bases[src as usize - 1], &bar.bases[src as usize - 2]);
        for col in 0..m.cols() {
            let ws = concat(&s[col]);
            for row in 0..m.rows() {
                if !m.get(row, col).is_zero() && concat(&t[row]) > ws {
                    filtration_ok = false;
                }
            }
        }
    }
    let mut pieces = Vec::new();
    for w in all_words(bar.p, r as usize) {
        let empty = vec![Vec::new(); bar.bases.len()];
        let idx = buckets.get(&w).unwrap_or(&empty);
        let dims: Vec<usize> = idx.iter().map(Vec::len).collect();
        let mut gr = FieldComplex::new(k, 1, -1, dims.clone());
        for (&src, m) in &bar.complex.maps {
            let q = src as usize;
            gr.set_map(src, m.submatrix(&idx[q - 2], &idx[q - 1]))?;
        }
        let homology = cohomology(&gr)?;
        let descents = w.descents();
        let expected_rank = usize::from(descents.len() + 1 == r as usize);
        let model_dims = (1..=r as usize).map(|q| face_model_dim(&w, q)).collect();
        pieces.push(GrPiece { word: w, descents, dims, model_dims, homology, expected_rank });
    }
    let gr_rank_sum = pieces.iter().map(|g| g.homology.total()).sum();
    Ok(GrSummary { p: bar.p, r, filtration_ok, pieces, gr_rank_sum, total_rank })
}

/// All gr pieces of the degree-r bar complex (r ≥ 1).
pub fn gr_summary(k: FieldSpec, r: u32) -> Result<GrSummary> {
    if r == 0 {
        return Err(Error::Config("gr pieces need r >= 1".into()));
    }
    let bar = bar_complex(k, r)?;
    summarize(&bar, k)
}

/// The gr piece of one word I.
pub fn gr_piece_check(k: FieldSpec, w: &Word) -> Result<GrPiece> {
    let s = gr_summary(k, w.len() as u32)?;
    Ok(s.piece(w).cloned().expect("every word has a bucket"))
}
