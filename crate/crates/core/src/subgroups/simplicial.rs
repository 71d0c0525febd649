//! Order complexes and reduced simplicial homology.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::group::{AbelianPGroup, Subgroup};
use crate::algebra::{rank_z, smith_invariants, FieldSpec, MatrixFq, MatrixZ};
use crate::error::{Error, Result};

/// Cap on the number of faces in any one dimension.
pub const MAX_FACES: usize = 100_000;

/// A simplicial complex on `vertices` whose faces are chains, each listed by
/// increasing vertex index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplexData {
    pub vertices: Vec<Subgroup>,
    /// faces[d] holds the d-simplices.
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplexData {
    pub fn dimension(&self) -> i32 {
        self.faces.len() as i32 - 1
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Faces of dimension d, with the empty face in dimension −1.
    fn cells(&self, d: i32) -> Vec<Vec<usize>> {
        match d {
            -1 => vec![Vec::new()],
            d if d >= 0 && (d as usize) < self.faces.len() => self.faces[d as usize].clone(),
            _ => Vec::new(),
        }
    }

    /// Boundary C̃_d → C̃_{d−1} as (row, col, ±1) entries, for d ≥ 0.
    fn boundary_entries(&self, d: i32) -> (usize, usize, Vec<(usize, usize, i64)>) {
        let src = self.cells(d);
        let tgt = self.cells(d - 1);
        let index: std::collections::HashMap<&Vec<usize>, usize> =
            tgt.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut entries = Vec::new();
        for (col, face) in src.iter().enumerate() {
            for i in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                entries.push((index[&sub], col, sign));
            }
        }
        (tgt.len(), src.len(), entries)
    }

    pub fn boundary_z(&self, d: i32) -> MatrixZ {
        let (r, c, entries) = self.boundary_entries(d);
        let mut m = MatrixZ::zeros(r, c);
        for (i, j, v) in entries {
            m.set(i, j, BigInt::from(v));
        }
        m
    }

    pub fn boundary_fq(&self, k: &FieldSpec, d: i32) -> MatrixFq {
        let (r, c, entries) = self.boundary_entries(d);
        let mut m = MatrixFq::zeros(r, c);
        for (i, j, v) in entries {
            m.set(i, j, k.from_int(v));
        }
        m
    }
}

/// Chains of vertices under a strict partial order, as a simplicial complex.
/// `vertices` must be sorted compatibly with `less` (a < b implies index a < index b).
pub fn chain_complex_of(
    vertices: Vec<Subgroup>,
    less: impl Fn(&Subgroup, &Subgroup) -> bool,
) -> Result<SimplicialComplexData> {
    let n = vertices.len();
    let up: Vec<Vec<usize>> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| less(&vertices[i], &vertices[j])).collect())
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while !current.is_empty() {
        if current.len() > MAX_FACES {
            return Err(Error::SizeCap {
                what: "faces in one dimension",
                size: current.len() as u64,
                cap: MAX_FACES as u64,
            });
        }
        let next: Vec<Vec<usize>> = current
            .iter()
            .flat_map(|f| {
                let last = *f.last().expect("nonempty");
                up[last].iter().map(move |&j| {
                    let mut g = f.clone();
                    g.push(j);
                    g
                })
            })
            .collect();
        faces.push(current);
        current = next;
    }
    Ok(SimplicialComplexData { vertices, faces })
}

/// The order complex of proper nontrivial subgroups of G.
pub fn order_complex(g: &AbelianPGroup) -> Result<SimplicialComplexData> {
    let top = g.log_order();
    let vertices: Vec<Subgroup> = g
        .enumerate_subgroups(None)?
        .into_iter()
        .filter(|h| h.log_order > 0 && h.log_order < top)
        .collect();
    chain_complex_of(vertices, |a, b| a.log_order < b.log_order && a.is_subgroup_of(b))
}

/// Order complex of the proper nontrivial subgroups of `top`, taken inside an ambient group.
pub fn order_complex_below(ambient_subgroups: &[Subgroup], top: &Subgroup) -> Result<SimplicialComplexData> {
    let vertices: Vec<Subgroup> = ambient_subgroups
        .iter()
        .filter(|h| h.log_order > 0 && h.log_order < top.log_order && h.is_subgroup_of(top))
        .cloned()
        .collect();
    chain_complex_of(vertices, |a, b| a.log_order < b.log_order && a.is_subgroup_of(b))
}

/// Reduced homology: `(degree, free rank, torsion coefficients)` for nonzero groups.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    pub groups: Vec<(i32, usize, Vec<u64>)>,
}

impl ReducedHomology {
    pub fn rank(&self, d: i32) -> usize {
        self.groups.iter().find(|g| g.0 == d).map_or(0, |g| g.1)
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.2.is_empty())
    }

    /// Free, and nonzero only in degree d.
    pub fn concentrated_free(&self, d: i32) -> bool {
        self.torsion_free() && self.groups.iter().all(|g| g.0 == d)
    }
}

/// Coefficients for reduced homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Field(FieldSpec),
}

pub fn reduced_homology(x: &SimplicialComplexData, coeff: Coefficients) -> Result<ReducedHomology> {
    let top = x.dimension();
    let dims: Vec<usize> = (-1..=top).map(|d| x.cells(d).len()).collect();
    let dim_at = |d: i32| dims[(d + 1) as usize];
    // rank and torsion of ∂_d for d = 0..=top; ∂_{−1} = ∂_{top+1} = 0
    let mut ranks = vec![0usize; (top + 3).max(1) as usize];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); ranks.len()];
    for d in 0..=top {
        let slot = (d + 1) as usize;
        match coeff {
            Coefficients::Integers => {
                let m = x.boundary_z(d);
                let inv = smith_invariants(&m);
                ranks[slot] = inv.len();
                torsion[slot] = inv
                    .iter()
                    .filter(|v| !v.is_one())
                    .map(|v| v.to_u64().expect("small torsion"))
                    .collect();
                debug_assert_eq!(rank_z(&m), inv.len());
            }
            Coefficients::Field(k) => ranks[slot] = x.boundary_fq(&k, d).rank(&k),
        }
    }
    let mut groups = Vec::new();
    for d in -1..=top {
        let slot = (d + 1) as usize;
        let out = ranks[slot];
        let inn = ranks.get(slot + 1).copied().unwrap_or(0);
        let free = dim_at(d) - out - inn;
        let tors = torsion.get(slot + 1).cloned().unwrap_or_default();
        if free > 0 || !tors.is_empty() {
            groups.push((d, free, tors));
        }
    }
    Ok(ReducedHomology { groups })
}
