//! Closed-fiber checks on u_1: the socle injectivity and the split sequence
//! 0 → A_2 → A_{1,1} → A_1/s(A) → 0.

use serde::Serialize;

use super::fpoly::sigma;
use super::maps::{hom_basis_images, images_to_matrix, u_basis_images, VarImage};
use super::ring::{ChainShape, IsogRing, IsogRingElement};
use crate::algebra::{BaseRing, FieldSpec, MatrixFq, PointRing, PolyRing};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub p: u32,
    pub r: u32,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub expected_rank: usize,
}

impl SocleReport {
    pub fn pass(&self) -> bool {
        self.rank == self.expected_rank
    }
}

/// Rank of u_1 : A_{r+1} ⊗ k → A_{1,r} ⊗ k at x_0 = 0.
pub fn socle_report(p: u32, r: u32) -> Result<SocleReport> {
    let k = FieldSpec::prime(p)?;
    let base = PointRing::closed_point(k);
    let source = IsogRing::new(base, ChainShape::new(p, vec![r + 1]))?;
    let target = IsogRing::new(base, ChainShape::new(p, vec![1, r]))?;
    let images = u_basis_images(&source, &target, 1)?;
    let m = images_to_matrix(&target, &images);
    Ok(SocleReport {
        p,
        r,
        rows: m.rows(),
        cols: m.cols(),
        rank: m.rank(&k),
        expected_rank: sigma(p, r + 1),
    })
}

pub fn socle_check(r: u32, p: u32) -> Result<bool> {
    Ok(socle_report(p, r)?.pass())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub p: u32,
    /// v∘u_1 = s∘w on every basis monomial of A_2, checked over k[x_0].
    pub square_commutes: bool,
    pub rank_u1: usize,
    pub dim_a11: usize,
    pub dim_coker_u1: usize,
    pub dim_coker_s: usize,
    /// v̄ vanishes on the image of u_1.
    pub composite_zero: bool,
    pub rank_vbar: usize,
}

impl RelationsReport {
    pub fn pass(&self) -> bool {
        let p = self.p as usize;
        self.square_commutes
            && self.composite_zero
            && self.rank_u1 == sigma(self.p, 2)
            && self.dim_coker_u1 == p
            && self.dim_coker_s == p
            && self.rank_vbar == p
            // exact in the middle: ker v̄ has the dimension of im u_1
            && self.dim_a11 - self.rank_vbar == self.rank_u1
    }
}

fn apply_linear<R: BaseRing>(
    target: &IsogRing<R>,
    images: &[IsogRingElement<R>],
    a: &IsogRingElement<R>,
) -> Result<IsogRingElement<R>> {
    let mut acc = target.zero();
    for (c, img) in a.coeffs().iter().zip(images) {
        if !target.base().is_zero(c) {
            acc = target.add(&acc, &target.scale(c, img))?;
        }
    }
    Ok(acc)
}

pub fn relations_report(p: u32) -> Result<RelationsReport> {
    let k = FieldSpec::prime(p)?;
    let base = PolyRing::new(k);
    let a2 = IsogRing::new(base, ChainShape::new(p, vec![2]))?;
    let a11 = IsogRing::new(base, ChainShape::new(p, vec![1, 1]))?;
    let a1 = IsogRing::new(base, ChainShape::new(p, vec![1]))?;
    let a = IsogRing::new(base, ChainShape::new(p, vec![]))?;

    let u1 = u_basis_images(&a2, &a11, 1)?;
    let x0_in_a1 = a1.variable(0)?;
    let v = hom_basis_images(&a11, &a1, &[VarImage::Var(1), VarImage::Elem(x0_in_a1)])?;
    let w = hom_basis_images(&a2, &a, &[VarImage::Elem(a.variable(0)?)])?;

    let mut square_commutes = true;
    for (u_img, w_img) in u1.iter().zip(&w) {
        let left = apply_linear(&a1, &v, u_img)?;
        let right = a1.from_base(w_img.coeffs()[0].clone());
        square_commutes &= left == right;
    }

    let u_mat = images_to_matrix(&a11, &u1);
    let v_mat = images_to_matrix(&a1, &v);
    // A_1 ⊗ k / s(A): drop the coordinate of the monomial 1
    let keep: Vec<usize> = (1..a1.dim()).collect();
    let all_cols: Vec<usize> = (0..a11.dim()).collect();
    let vbar = v_mat.submatrix(&keep, &all_cols);
    let composite_zero = vbar.mul(&k, &u_mat).is_zero();
    let rank_u1 = u_mat.rank(&k);
    let s_mat = MatrixFq::from_columns(a1.dim(), &[a1.residues(&a1.one())]);
    Ok(RelationsReport {
        p,
        square_commutes,
        rank_u1,
        dim_a11: a11.dim(),
        dim_coker_u1: a11.dim() - rank_u1,
        dim_coker_s: a1.dim() - s_mat.rank(&k),
        composite_zero,
        rank_vbar: vbar.rank(&k),
    })
}

pub fn relations_sequence_check(p: u32) -> Result<bool> {
    Ok(relations_report(p)?.pass())
}
