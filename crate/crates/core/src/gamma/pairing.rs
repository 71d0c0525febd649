//! Evaluation of Γ_r against A_r.
//!
//! ⟨P_W, g⟩ is the coefficient of x_1^{w_1}⋯x_r^{w_r} in the image of g under
//! A_r → A_{1,…,1}, x_1 ↦ x_r. This is defined for every word, admissible or
//! not, so it also serves as an independent check on normalization.
//!
//! Values live in the chosen coefficient ring: exact k[x] or k⟦x⟧/(x^T).
//! Exact values grow quickly in x-degree with r.

use super::ring::{GammaElement, RawGamma};
use super::word::Word;
use crate::algebra::{BaseRing, Poly};
use crate::error::{Error, Result};
use crate::isogeny::{hom_basis_images, ChainShape, IsogRing, IsogRingElement, VarImage};

#[derive(Clone, Debug)]
pub struct PairingTable<R: BaseRing> {
    r: usize,
    source: IsogRing<R>,
    target: IsogRing<R>,
    images: Vec<IsogRingElement<R>>,
}

impl<R: BaseRing> PairingTable<R> {
    pub fn new(base: R, r: usize) -> Result<Self> {
        let p = base.field().characteristic();
        let source_shape = if r == 0 { vec![] } else { vec![r as u32] };
        let source = IsogRing::new(base.clone(), ChainShape::new(p, source_shape))?;
        let target = IsogRing::new(base, ChainShape::new(p, vec![1; r]))?;
        let images = if r == 0 {
            vec![target.one()]
        } else {
            hom_basis_images(&source, &target, &[VarImage::Var(r)])?
        };
        Ok(PairingTable { r, source, target, images })
    }

    pub fn grade(&self) -> usize {
        self.r
    }

    pub fn base(&self) -> &R {
        self.source.base()
    }

    /// The ring A_r (shape `(r)`, or `()` for r = 0).
    pub fn ring(&self) -> &IsogRing<R> {
        &self.source
    }

    /// The ring A_{1,…,1} with r entries.
    pub fn split_ring(&self) -> &IsogRing<R> {
        &self.target
    }

    /// A left coefficient from Γ, seen in the coefficient ring.
    pub fn coefficient(&self, c: &Poly) -> R::Elem {
        self.base().from_poly(c.coeffs())
    }

    fn target_index(&self, w: &Word) -> Result<usize> {
        if w.len() != self.r {
            return Err(Error::LengthMismatch(w.len(), self.r));
        }
        let exps: Vec<u32> = w.letters().iter().map(|&l| l as u32).collect();
        self.target.index_of(&exps).ok_or(Error::IndexOutOfRange {
            index: *w.letters().iter().max().unwrap_or(&0) as usize,
            max: self.source.shape().p as usize,
        })
    }

    /// ⟨P_W, g⟩ for g ∈ A_r and any word W of length r.
    pub fn pair_word(&self, w: &Word, g: &IsogRingElement<R>) -> Result<R::Elem> {
        if g.shape() != self.source.shape().rs.as_slice() {
            return Err(Error::ShapeMismatch(g.shape().to_vec(), self.source.shape().rs.clone()));
        }
        let t = self.target_index(w)?;
        let base = self.base();
        let mut acc = base.zero();
        for (c, img) in g.coeffs().iter().zip(&self.images) {
            if base.is_zero(c) {
                continue;
            }
            let v = &img.coeffs()[t];
            if !base.is_zero(v) {
                base.add_assign(&mut acc, &base.mul(c, v));
            }
        }
        Ok(acc)
    }

    /// ⟨Σ c_W P_W, g⟩ = Σ c_W ⟨P_W, g⟩ over arbitrary words.
    pub fn pair_raw(&self, e: &RawGamma, g: &IsogRingElement<R>) -> Result<R::Elem> {
        let base = self.base();
        let mut acc = base.zero();
        for (w, c) in e {
            let v = self.pair_word(w, g)?;
            base.add_assign(&mut acc, &base.mul(&self.coefficient(c), &v));
        }
        Ok(acc)
    }

    pub fn pair(&self, e: &GammaElement, g: &IsogRingElement<R>) -> Result<R::Elem> {
        if e.grade != self.r {
            return Err(Error::GradeMismatch(e.grade, self.r));
        }
        self.pair_raw(&e.terms, g)
    }

    /// ⟨e, m_idx⟩ for the idx-th monomial basis element of A_r.
    pub fn pair_basis(&self, e: &RawGamma, idx: usize) -> Result<R::Elem> {
        let base = self.base();
        let img = &self.images[idx];
        let mut acc = base.zero();
        for (w, c) in e {
            let v = &img.coeffs()[self.target_index(w)?];
            if !base.is_zero(v) {
                base.add_assign(&mut acc, &base.mul(&self.coefficient(c), v));
            }
        }
        Ok(acc)
    }

    /// ⟨P_W, basis monomial idx⟩ for every idx.
    pub fn word_row(&self, w: &Word) -> Result<Vec<R::Elem>> {
        let t = self.target_index(w)?;
        Ok(self.images.iter().map(|img| img.coeffs()[t].clone()).collect())
    }
}

/// Coefficient extraction in A_{1,…,1}: the value of P_W on a split element.
pub fn pair_split<R: BaseRing>(
    ring: &IsogRing<R>,
    w: &Word,
    h: &IsogRingElement<R>,
) -> Result<R::Elem> {
    if ring.shape().rs.iter().any(|&r| r != 1) || ring.len() != w.len() {
        return Err(Error::ShapeMismatch(ring.shape().rs.clone(), vec![1; w.len()]));
    }
    let exps: Vec<u32> = w.letters().iter().map(|&l| l as u32).collect();
    let idx = ring.index_of(&exps).ok_or(Error::IndexOutOfRange {
        index: *w.letters().iter().max().unwrap_or(&0) as usize,
        max: ring.shape().p as usize,
    })?;
    Ok(h.coeffs()[idx].clone())
}
