//! The ring maps u_k and s_k between isogeny rings.

use super::ring::{IsogRing, IsogRingElement};
use crate::algebra::{BaseRing, Fq, MatrixFq};
use crate::error::{Error, Result};

/// Where a ring homomorphism sends the source variable x_i (i ≥ 1).
#[derive(Clone, Debug)]
pub enum VarImage<R: BaseRing> {
    /// A target variable x_j, j ≥ 1.
    Var(usize),
    /// A general element of the target ring.
    Elem(IsogRingElement<R>),
}

/// Images of all source basis monomials under the R-linear ring map fixing x_0
/// and sending x_i to `images[i-1]`. Built incrementally: each monomial is its
/// predecessor times one variable.
pub fn hom_basis_images<R: BaseRing>(
    source: &IsogRing<R>,
    target: &IsogRing<R>,
    images: &[VarImage<R>],
) -> Result<Vec<IsogRingElement<R>>> {
    if images.len() != source.len() {
        return Err(Error::LengthMismatch(images.len(), source.len()));
    }
    let mut out: Vec<IsogRingElement<R>> = Vec::with_capacity(source.dim());
    out.push(target.one());
    for idx in 1..source.dim() {
        let exps = source.exponents(idx);
        let i = exps.iter().rposition(|&e| e > 0).expect("idx > 0 has a variable");
        let mut prev_exps = exps.clone();
        prev_exps[i] -= 1;
        let prev = &out[source.index_of(&prev_exps).expect("in range")];
        let img = match &images[i] {
            VarImage::Var(j) => target.mul_by_var(prev, *j)?,
            VarImage::Elem(e) => target.mul(prev, e)?,
        };
        out.push(img);
    }
    Ok(out)
}

fn check_u_shapes<R: BaseRing>(source: &IsogRing<R>, target: &IsogRing<R>, k: usize) -> Result<()> {
    let expected = target.shape().merged(k)?;
    if expected.rs != source.shape().rs {
        return Err(Error::ShapeMismatch(source.shape().rs.clone(), expected.rs));
    }
    Ok(())
}

fn u_var_images<R: BaseRing>(source: &IsogRing<R>, k: usize) -> Vec<VarImage<R>> {
    (1..=source.len()).map(|i| VarImage::Var(if i < k { i } else { i + 1 })).collect()
}

/// u_k on basis monomials: images of every source basis element, in order.
pub fn u_basis_images<R: BaseRing>(
    source: &IsogRing<R>,
    target: &IsogRing<R>,
    k: usize,
) -> Result<Vec<IsogRingElement<R>>> {
    check_u_shapes(source, target, k)?;
    hom_basis_images(source, target, &u_var_images(source, k))
}

/// u_k applied to one element by relabelling each monomial and reducing in the target.
pub fn u_map<R: BaseRing>(
    source: &IsogRing<R>,
    target: &IsogRing<R>,
    k: usize,
    a: &IsogRingElement<R>,
) -> Result<IsogRingElement<R>> {
    check_u_shapes(source, target, k)?;
    if a.shape() != source.shape().rs.as_slice() {
        return Err(Error::ShapeMismatch(a.shape().to_vec(), source.shape().rs.clone()));
    }
    let base = source.base();
    let mut acc = target.zero();
    for (idx, c) in a.coeffs().iter().enumerate() {
        if base.is_zero(c) {
            continue;
        }
        let exps = source.exponents(idx);
        let mut t = vec![0; target.len()];
        for (i, &e) in exps.iter().enumerate() {
            let i1 = i + 1;
            let dst = if i1 < k { i1 } else { i1 + 1 };
            t[dst - 1] = e;
        }
        let m = target.monomial(&t)?;
        acc = target.add(&acc, &target.scale(c, &m))?;
    }
    Ok(acc)
}

/// s_k(f) = f^{(p^{r_1+..+r_k})}(x_k) with f a polynomial over k; s_0(f) = f(x_0).
pub fn s_map<R: BaseRing>(ring: &IsogRing<R>, k: usize, f: &[Fq]) -> Result<IsogRingElement<R>> {
    if k > ring.len() {
        return Err(Error::IndexOutOfRange { index: k, max: ring.len() });
    }
    let base = ring.base();
    if k == 0 {
        return Ok(ring.from_base(base.from_poly(f)));
    }
    let field = *base.field();
    let twist: u32 = ring.shape().rs[..k].iter().sum();
    let raw: Vec<(Vec<u32>, Fq)> = f
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, &c)| {
            let mut e = vec![0; ring.len() + 1];
            e[k] = i as u32;
            (e, field.frobenius(c, twist))
        })
        .collect();
    ring.reduce(&raw)
}

/// Matrix whose columns are the residues of `images` in the target monomial basis.
pub fn images_to_matrix<R: BaseRing>(target: &IsogRing<R>, images: &[IsogRingElement<R>]) -> MatrixFq {
    let cols: Vec<Vec<Fq>> = images.iter().map(|e| target.residues(e)).collect();
    MatrixFq::from_columns(target.dim(), &cols)
}
