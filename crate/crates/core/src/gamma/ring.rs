//! The graded ring Γ: left k[x]-combinations of words in P_0..P_p.

use std::collections::BTreeMap;

use super::word::Word;
use crate::algebra::series::{poly_add, poly_frobenius, poly_mul, poly_neg};
use crate::algebra::{FieldSpec, Fq, Poly};
use crate::error::{Error, Result};

/// Σ c_W P_W over arbitrary words of one length, c_W ∈ k[x] on the left.
pub type RawGamma = BTreeMap<Word, Poly>;

/// An element of Γ_r in the admissible basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement {
    pub grade: usize,
    pub terms: BTreeMap<Word, Poly>,
}

impl GammaElement {
    pub fn zero(grade: usize) -> Self {
        GammaElement { grade, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }
}

/// Bookkeeping from one normalization run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewriteStats {
    pub rewrites: u64,
    /// Number of (old word, new word) pairs compared in the monomial order.
    pub order_checks: u64,
}

impl RewriteStats {
    pub fn absorb(&mut self, other: RewriteStats) {
        self.rewrites += other.rewrites;
        self.order_checks += other.order_checks;
    }
}

#[derive(Clone, Debug)]
pub struct GammaRing {
    k: FieldSpec,
    p: u32,
    /// Row i holds the left coefficients of P_i·x in the basis P_0..P_p.
    x_rows: Vec<Vec<Poly>>,
}

impl GammaRing {
    pub fn new(k: FieldSpec) -> Self {
        let p = k.characteristic();
        let n = p as usize + 1;
        let one = Poly::constant(Fq::ONE);
        let mut x_rows = vec![vec![Poly::zero(); n]; n];
        x_rows[0][p as usize] = Poly::monomial(k.from_int(-1), p as usize + 1);
        for (i, row) in x_rows.iter_mut().enumerate().skip(1) {
            row[i - 1] = one.clone();
        }
        x_rows[1][p as usize] = poly_add(&k, &x_rows[1][p as usize], &Poly::monomial(Fq::ONE, 1));
        x_rows[p as usize][p as usize] =
            poly_add(&k, &x_rows[p as usize][p as usize], &Poly::monomial(Fq::ONE, p as usize));
        GammaRing { k, p, x_rows }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.k
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn generator(&self, i: u8) -> GammaElement {
        self.word(&Word::new(&[i]))
    }

    /// The monomial P_W in normal form.
    pub fn word(&self, w: &Word) -> GammaElement {
        self.normalize(RawGamma::from([(w.clone(), Poly::constant(Fq::ONE))]))
            .expect("single word has one grade")
    }

    /// A Γ_0 element c ∈ k[x].
    pub fn scalar(&self, c: Poly) -> GammaElement {
        let mut e = GammaElement::zero(0);
        if !c.is_zero() {
            e.terms.insert(Word::empty(), c);
        }
        e
    }

    /// v ↦ v·X for a row vector of left coefficients.
    fn times_x(&self, v: &[Poly]) -> Vec<Poly> {
        let n = v.len();
        let mut out = vec![Poly::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, xij) in self.x_rows[i].iter().enumerate() {
                if !xij.is_zero() {
                    out[j] = poly_add(&self.k, &out[j], &poly_mul(&self.k, vi, xij));
                }
            }
        }
        out
    }

    /// Left coefficients of P_i·f in the basis P_0..P_p.
    pub fn right_mult_gen(&self, i: u8, f: &Poly) -> Vec<Poly> {
        let n = self.p as usize + 1;
        let mut acc = vec![Poly::zero(); n];
        let mut cur = vec![Poly::zero(); n];
        cur[i as usize] = Poly::constant(Fq::ONE);
        let coeffs = f.coeffs();
        for (deg, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                // P_i c = c^p P_i
                let cp = Poly::constant(self.k.frobenius(c, 1));
                for (a, v) in acc.iter_mut().zip(&cur) {
                    if !v.is_zero() {
                        *a = poly_add(&self.k, a, &poly_mul(&self.k, &cp, v));
                    }
                }
            }
            if deg + 1 < coeffs.len() {
                cur = self.times_x(&cur);
            }
        }
        acc
    }

    /// e·f for e ∈ Γ_1.
    pub fn right_mult(&self, e: &GammaElement, f: &Poly) -> Result<GammaElement> {
        if e.grade != 1 {
            return Err(Error::GradeMismatch(e.grade, 1));
        }
        let mut raw = RawGamma::new();
        for (w, c) in &e.terms {
            for (j, g) in self.right_mult_gen(w.0[0], f).into_iter().enumerate() {
                add_term(&self.k, &mut raw, Word(vec![j as u8]), poly_mul(&self.k, c, &g));
            }
        }
        self.normalize(raw)
    }

    /// P_W·f as a left combination of words of the same length (not normalized).
    pub fn right_mult_word(&self, w: &Word, f: &Poly) -> RawGamma {
        let mut out = RawGamma::new();
        if f.is_zero() {
            return out;
        }
        let Some((&last, prefix)) = w.0.split_last() else {
            out.insert(Word::empty(), f.clone());
            return out;
        };
        let prefix = Word(prefix.to_vec());
        for (j, g) in self.right_mult_gen(last, f).into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            for (mut k, h) in self.right_mult_word(&prefix, &g) {
                k.0.push(j as u8);
                add_term(&self.k, &mut out, k, h);
            }
        }
        out
    }

    /// Rewrites to the admissible basis.
    pub fn normalize(&self, raw: RawGamma) -> Result<GammaElement> {
        self.normalize_counted(raw).map(|(e, _)| e)
    }

    /// Repeatedly rewrites the largest inadmissible word at its rightmost descent
    /// (i, 0) using P_iP_0 = −Σ_{j≥1} x^j P_iP_j. Panics if a rewrite ever
    /// produces a word that is not strictly smaller.
    pub fn normalize_counted(&self, raw: RawGamma) -> Result<(GammaElement, RewriteStats)> {
        let mut stats = RewriteStats::default();
        let grade = raw.keys().next().map_or(0, Word::len);
        if let Some(bad) = raw.keys().find(|w| w.len() != grade) {
            return Err(Error::LengthMismatch(bad.len(), grade));
        }
        let mut raw: RawGamma = raw.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        loop {
            let Some(w) = raw.keys().rev().find(|w| !w.is_admissible()).cloned() else {
                break;
            };
            let c = raw.remove(&w).expect("present");
            let pos = w.rightmost_descent().expect("inadmissible");
            let u = Word(w.0[..pos].to_vec());
            let i = w.0[pos];
            let tail = &w.0[pos + 2..];
            stats.rewrites += 1;
            for j in 1..=self.p as u8 {
                let xj = Poly::monomial(Fq::ONE, j as usize);
                for (mut k, g) in self.right_mult_word(&u, &xj) {
                    k.0.push(i);
                    k.0.push(j);
                    k.0.extend_from_slice(tail);
                    stats.order_checks += 1;
                    assert!(k < w, "rewrite of {w:?} produced {k:?}, not smaller");
                    let coeff = poly_neg(&self.k, &poly_mul(&self.k, &c, &g));
                    add_term(&self.k, &mut raw, k, coeff);
                }
            }
        }
        Ok((GammaElement { grade, terms: raw }, stats))
    }

    pub fn add(&self, a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
        if a.grade != b.grade {
            return Err(Error::GradeMismatch(a.grade, b.grade));
        }
        let mut terms = a.terms.clone();
        for (w, c) in &b.terms {
            add_term(&self.k, &mut terms, w.clone(), c.clone());
        }
        Ok(GammaElement { grade: a.grade, terms })
    }

    /// Concatenate, migrate b's left coefficients through a's words, normalize.
    pub fn gamma_mul(&self, a: &GammaElement, b: &GammaElement) -> Result<GammaElement> {
        self.gamma_mul_counted(a, b).map(|(e, _)| e)
    }

    pub fn gamma_mul_counted(
        &self,
        a: &GammaElement,
        b: &GammaElement,
    ) -> Result<(GammaElement, RewriteStats)> {
        let mut raw = RawGamma::new();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                for (k, g) in self.right_mult_word(wa, cb) {
                    add_term(&self.k, &mut raw, k.concat(wb), poly_mul(&self.k, ca, &g));
                }
            }
        }
        if raw.is_empty() {
            return Ok((GammaElement::zero(a.grade + b.grade), RewriteStats::default()));
        }
        self.normalize_counted(raw)
    }

    /// Frobenius on coefficients: needed when moving scalars across grades.
    pub fn twist(&self, f: &Poly, r: u32) -> Poly {
        poly_frobenius(&self.k, f, r)
    }
}

pub(crate) fn add_term(k: &FieldSpec, map: &mut RawGamma, w: Word, c: Poly) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = poly_add(k, o.get(), &c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}
