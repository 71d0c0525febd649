//! The normalized bar complex of Γ in internal degree r, reduced to the closed fiber.
//!
//! Chains are left-A combinations of tensors P_{W_1}⊗⋯⊗P_{W_q} with W_i
//! admissible and |W_1|+⋯+|W_q| = r. Faces multiply neighbours and move the
//! resulting left coefficients through the tensor to the far left; only then
//! is x set to 0.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::{FieldSpec, Fq, MatrixFq, Poly};
use crate::complex::{compositions, FieldComplex};
use crate::error::Result;
use crate::gamma::{admissible_basis, GammaElement, GammaRing, Word};

/// A basis tensor of the bar complex: one admissible word per slot.
pub type BarTuple = Vec<Word>;

#[derive(Clone, Debug)]
pub struct BarComplexOverK {
    pub p: u32,
    pub r: u32,
    /// Basis of each chain degree q = 1..=r (index q−1), compositions in lex order.
    pub bases: Vec<Vec<BarTuple>>,
    pub complex: FieldComplex,
}

impl BarComplexOverK {
    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }
}

/// All tuples of admissible words whose lengths form a composition of r into q parts.
pub fn bar_basis(p: u32, r: u32, q: usize) -> Vec<BarTuple> {
    let mut out = Vec::new();
    for comp in compositions(r, q) {
        let bases: Vec<Vec<Word>> = comp.iter().map(|&ri| admissible_basis(p, ri as usize)).collect();
        let mut idx = vec![0usize; q];
        'outer: loop {
            out.push(idx.iter().zip(&bases).map(|(&i, b)| b[i].clone()).collect());
            for slot in (0..q).rev() {
                idx[slot] += 1;
                if idx[slot] < bases[slot].len() {
                    continue 'outer;
                }
                idx[slot] = 0;
            }
            break;
        }
    }
    out
}

/// Face computations with memoized coefficient transport.
pub(crate) struct FaceEngine {
    gamma: GammaRing,
    transport: RefCell<HashMap<(Word, Poly), GammaElement>>,
}

impl FaceEngine {
    pub(crate) fn new(k: FieldSpec) -> Self {
        FaceEngine { gamma: GammaRing::new(k), transport: RefCell::new(HashMap::new()) }
    }

    fn k(&self) -> &FieldSpec {
        self.gamma.field()
    }

    /// P_W·f in the admissible basis.
    fn transported(&self, w: &Word, f: &Poly) -> Result<GammaElement> {
        let key = (w.clone(), f.clone());
        if let Some(e) = self.transport.borrow().get(&key) {
            return Ok(e.clone());
        }
        let e = self.gamma.normalize(self.gamma.right_mult_word(w, f))?;
        self.transport.borrow_mut().insert(key, e.clone());
        Ok(e)
    }

    /// Moves a coefficient standing right of `slots` to the far left; returns the
    /// rewritten slots with their left coefficients in k[x].
    fn push_left(&self, slots: &[Word], c: Poly) -> Result<Vec<(Vec<Word>, Poly)>> {
        let Some((last, rest)) = slots.split_last() else {
            return Ok(vec![(Vec::new(), c)]);
        };
        let mut out = Vec::new();
        for (w, g) in self.transported(last, &c)?.terms {
            for (mut prefix, h) in self.push_left(rest, g)? {
                prefix.push(w.clone());
                out.push((prefix, h));
            }
        }
        Ok(out)
    }

    /// The i-th face (0-based: merge slots i and i+1) at x = 0, with its sign.
    pub(crate) fn face(&self, t: &BarTuple, i: usize) -> Result<Vec<(BarTuple, Fq)>> {
        let k = *self.k();
        let prod = self.gamma.gamma_mul(&self.gamma.word(&t[i]), &self.gamma.word(&t[i + 1]))?;
        // (−1)^{i+1} with 1-based face index i+1
        let sign = if i % 2 == 0 { k.from_int(-1) } else { Fq::ONE };
        let mut out = Vec::new();
        for (kw, gamma_k) in prod.terms {
            for (mut prefix, h) in self.push_left(&t[..i], gamma_k)? {
                let v = h.coeff(0);
                if v.is_zero() {
                    continue;
                }
                prefix.push(kw.clone());
                prefix.extend_from_slice(&t[i + 2..]);
                out.push((prefix, k.mul(sign, v)));
            }
        }
        Ok(out)
    }
}

/// Differential out of chain degree q as a matrix from `bases[q-1]` to `bases[q-2]`.
pub(crate) fn boundary_matrix(
    engine: &FaceEngine,
    source: &[BarTuple],
    target: &[BarTuple],
) -> Result<MatrixFq> {
    let k = *engine.k();
    let index: HashMap<&BarTuple, usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut m = MatrixFq::zeros(target.len(), source.len());
    for (col, t) in source.iter().enumerate() {
        for i in 0..t.len() - 1 {
            for (img, v) in engine.face(t, i)? {
                let row = index[&img];
                m.set(row, col, k.add(m.get(row, col), v));
            }
        }
    }
    Ok(m)
}

/// The bar complex in internal degree r as a chain complex over k in degrees 1..=r
/// (degree 0 holds k when r = 0).
pub fn bar_complex(k: FieldSpec, r: u32) -> Result<BarComplexOverK> {
    let p = k.characteristic();
    if r == 0 {
        let complex = FieldComplex::new(k, 0, -1, vec![1]);
        return Ok(BarComplexOverK { p, r, bases: vec![vec![Vec::new()]], complex });
    }
    let engine = FaceEngine::new(k);
    let bases: Vec<Vec<BarTuple>> = (1..=r as usize).map(|q| bar_basis(p, r, q)).collect();
    let mut complex = FieldComplex::new(k, 1, -1, bases.iter().map(Vec::len).collect());
    for q in 2..=r as usize {
        let m = boundary_matrix(&engine, &bases[q - 1], &bases[q - 2])?;
        complex.set_map(q as i32, m)?;
    }
    complex.check_square_zero()?;
    Ok(BarComplexOverK { p, r, bases, complex })
}
