//! Reduced normal forms in A_{r_1,...,r_q} = R[x_1..x_q]/(F_{p^{r_1}}(x_0,x_1), ..., F_{p^{r_q}}(x_{q-1},x_q)).
//!
//! An element is stored densely: one coefficient in the base ring R per
//! monomial x_1^{a_1}..x_q^{a_q} with a_i < σ(p^{r_i}). Monomials are indexed
//! mixed-radix with x_1 most significant.

use std::collections::HashMap;

use super::fpoly::{f_poly, sigma};
use crate::algebra::{BaseRing, Fq};
use crate::error::{Error, Result};

/// Longest chain supported; compositions of r ≤ 5 plus the duality checks fit.
pub const MAX_LEN: usize = 8;

pub(crate) type Exps = [u32; MAX_LEN];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainShape {
    pub p: u32,
    pub rs: Vec<u32>,
}

impl ChainShape {
    pub fn new(p: u32, rs: Vec<u32>) -> Self {
        ChainShape { p, rs }
    }

    pub fn len(&self) -> usize {
        self.rs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rs.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.rs.iter().sum()
    }

    /// The shape with r_k and r_{k+1} merged (k is 1-based).
    pub fn merged(&self, k: usize) -> Result<ChainShape> {
        let q = self.rs.len();
        if k == 0 || k >= q {
            return Err(Error::IndexOutOfRange { index: k, max: q.saturating_sub(1) });
        }
        let mut rs = self.rs[..k - 1].to_vec();
        rs.push(self.rs[k - 1] + self.rs[k]);
        rs.extend_from_slice(&self.rs[k + 1..]);
        Ok(ChainShape { p: self.p, rs })
    }
}

#[derive(Clone, Debug)]
pub struct IsogRingElement<R: BaseRing> {
    pub(crate) rs: Vec<u32>,
    pub(crate) coeffs: Vec<R::Elem>,
}

impl<R: BaseRing> PartialEq for IsogRingElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.coeffs == other.coeffs
    }
}

impl<R: BaseRing> IsogRingElement<R> {
    pub fn shape(&self) -> &[u32] {
        &self.rs
    }

    /// Coefficients indexed by monomial.
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }
}

#[derive(Clone, Debug)]
pub struct IsogRing<R: BaseRing> {
    base: R,
    shape: ChainShape,
    bounds: Vec<usize>,
    strides: Vec<usize>,
    dim: usize,
    /// For j ≥ 2: x_j^σ = Σ c·x_{j-1}^a x_j^b, as `(a, b, c)`.
    tails: Vec<Vec<(u32, u32, Fq)>>,
    /// For j = 1: x_1^σ = Σ_b g_b x_1^b with g_b ∈ R.
    first_tail: Vec<(u32, R::Elem)>,
}

impl<R: BaseRing> IsogRing<R> {
    pub fn new(base: R, shape: ChainShape) -> Result<Self> {
        let p = shape.p;
        if p != base.field().characteristic() {
            return Err(Error::Config(format!(
                "shape prime {p} differs from field characteristic {}",
                base.field().characteristic()
            )));
        }
        if shape.rs.len() > MAX_LEN {
            return Err(Error::SizeCap {
                what: "chain length",
                size: shape.rs.len() as u64,
                cap: MAX_LEN as u64,
            });
        }
        if let Some(&r) = shape.rs.iter().find(|&&r| r == 0) {
            return Err(Error::Config(format!("chain entries must be positive, got {r}")));
        }
        let k = *base.field();
        let bounds: Vec<usize> = shape.rs.iter().map(|&r| sigma(p, r)).collect();
        let q = bounds.len();
        let mut strides = vec![1usize; q];
        for i in (0..q.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * bounds[i + 1];
        }
        let dim = bounds.iter().product();
        let tails: Vec<_> = shape.rs.iter().map(|&r| f_poly(p, r).v_tail(&k)).collect();
        let first_tail = match tails.first() {
            None => Vec::new(),
            Some(t) => {
                let mut by_b: Vec<Vec<Fq>> = vec![Vec::new(); bounds[0]];
                for &(a, b, c) in t {
                    let v = &mut by_b[b as usize];
                    if v.len() <= a as usize {
                        v.resize(a as usize + 1, Fq::ZERO);
                    }
                    v[a as usize] = k.add(v[a as usize], c);
                }
                by_b.into_iter()
                    .enumerate()
                    .map(|(b, poly)| (b as u32, base.from_poly(&poly)))
                    .filter(|(_, g)| !base.is_zero(g))
                    .collect()
            }
        };
        Ok(IsogRing { base, shape, bounds, strides, dim, tails, first_tail })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn shape(&self) -> &ChainShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    /// σ(p^{r_i}) per variable.
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn exponents(&self, mut idx: usize) -> Vec<u32> {
        let mut out = vec![0; self.len()];
        for i in 0..self.len() {
            out[i] = (idx / self.strides[i]) as u32;
            idx %= self.strides[i];
        }
        out
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        if exps.len() != self.len() {
            return None;
        }
        let mut idx = 0;
        for (i, &e) in exps.iter().enumerate() {
            if e as usize >= self.bounds[i] {
                return None;
            }
            idx += e as usize * self.strides[i];
        }
        Some(idx)
    }

    fn check(&self, a: &IsogRingElement<R>) -> Result<()> {
        if a.rs != self.shape.rs {
            return Err(Error::ShapeMismatch(a.rs.clone(), self.shape.rs.clone()));
        }
        Ok(())
    }

    pub fn zero(&self) -> IsogRingElement<R> {
        IsogRingElement { rs: self.shape.rs.clone(), coeffs: vec![self.base.zero(); self.dim] }
    }

    pub fn from_base(&self, c: R::Elem) -> IsogRingElement<R> {
        let mut z = self.zero();
        z.coeffs[0] = c;
        z
    }

    pub fn one(&self) -> IsogRingElement<R> {
        self.from_base(self.base.one())
    }

    /// Basis element number `idx` with coefficient 1.
    pub fn basis_element(&self, idx: usize) -> IsogRingElement<R> {
        let mut z = self.zero();
        z.coeffs[idx] = self.base.one();
        z
    }

    pub fn is_zero(&self, a: &IsogRingElement<R>) -> bool {
        a.coeffs.iter().all(|c| self.base.is_zero(c))
    }

    /// The reduced form of x_1^{e_1}..x_q^{e_q}; exponents may exceed the bounds.
    pub fn monomial(&self, exps: &[u32]) -> Result<IsogRingElement<R>> {
        if exps.len() != self.len() {
            return Err(Error::LengthMismatch(exps.len(), self.len()));
        }
        let mut e: Exps = [0; MAX_LEN];
        e[..exps.len()].copy_from_slice(exps);
        Ok(self.reduce_map(HashMap::from([(e, self.base.one())])))
    }

    /// x_j for 0 ≤ j ≤ q; x_0 is the base ring parameter.
    pub fn variable(&self, j: usize) -> Result<IsogRingElement<R>> {
        if j > self.len() {
            return Err(Error::IndexOutOfRange { index: j, max: self.len() });
        }
        if j == 0 {
            return Ok(self.from_base(self.base.param()));
        }
        let mut e = vec![0; self.len()];
        e[j - 1] = 1;
        self.monomial(&e)
    }

    /// Normal form of a polynomial over k in x_0..x_q, given as `(exponents, coeff)` with x_0 first.
    pub fn reduce(&self, raw: &[(Vec<u32>, Fq)]) -> Result<IsogRingElement<R>> {
        let mut map: HashMap<Exps, R::Elem> = HashMap::new();
        for (exps, c) in raw {
            if exps.len() != self.len() + 1 {
                return Err(Error::LengthMismatch(exps.len(), self.len() + 1));
            }
            if c.is_zero() {
                continue;
            }
            let mut e: Exps = [0; MAX_LEN];
            e[..self.len()].copy_from_slice(&exps[1..]);
            let coeff = self.base.scale(*c, &self.base.param_pow(exps[0]));
            add_into(&self.base, &mut map, e, coeff);
        }
        Ok(self.reduce_map(map))
    }

    /// Normal form of Σ c·x^e with coefficients already in R.
    pub(crate) fn reduce_map(&self, mut raw: HashMap<Exps, R::Elem>) -> IsogRingElement<R> {
        let base = &self.base;
        for j in (0..self.len()).rev() {
            let sigma = self.bounds[j];
            let Some(maxe) = raw.keys().map(|e| e[j] as usize).max() else { break };
            if maxe < sigma {
                continue;
            }
            let mut buckets: Vec<HashMap<Exps, R::Elem>> = vec![HashMap::new(); maxe + 1];
            for (e, c) in raw.drain() {
                buckets[e[j] as usize].insert(e, c);
            }
            for ex in (sigma..=maxe).rev() {
                let bucket = std::mem::take(&mut buckets[ex]);
                for (e, c) in bucket {
                    if base.is_zero(&c) {
                        continue;
                    }
                    let shift = (ex - sigma) as u32;
                    if j == 0 {
                        for (b, g) in &self.first_tail {
                            let mut e2 = e;
                            e2[0] = shift + b;
                            add_into(base, &mut buckets[e2[0] as usize], e2, base.mul(&c, g));
                        }
                    } else {
                        for &(a, b, s) in &self.tails[j] {
                            let mut e2 = e;
                            e2[j] = shift + b;
                            e2[j - 1] += a;
                            add_into(base, &mut buckets[e2[j] as usize], e2, base.scale(s, &c));
                        }
                    }
                }
            }
            for bucket in buckets.into_iter().take(sigma) {
                for (e, c) in bucket {
                    add_into(base, &mut raw, e, c);
                }
            }
        }
        let mut out = self.zero();
        for (e, c) in raw {
            let idx = self.index_of(&e[..self.len()]).expect("fully reduced");
            base.add_assign(&mut out.coeffs[idx], &c);
        }
        out
    }

    pub fn add(&self, a: &IsogRingElement<R>, b: &IsogRingElement<R>) -> Result<IsogRingElement<R>> {
        self.check(a)?;
        self.check(b)?;
        Ok(IsogRingElement {
            rs: a.rs.clone(),
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect(),
        })
    }

    pub fn neg(&self, a: &IsogRingElement<R>) -> IsogRingElement<R> {
        IsogRingElement { rs: a.rs.clone(), coeffs: a.coeffs.iter().map(|x| self.base.neg(x)).collect() }
    }

    pub fn sub(&self, a: &IsogRingElement<R>, b: &IsogRingElement<R>) -> Result<IsogRingElement<R>> {
        self.add(a, &self.neg(b))
    }

    /// Multiplication by an element of the base ring.
    pub fn scale(&self, c: &R::Elem, a: &IsogRingElement<R>) -> IsogRingElement<R> {
        IsogRingElement { rs: a.rs.clone(), coeffs: a.coeffs.iter().map(|x| self.base.mul(c, x)).collect() }
    }

    pub fn mul(&self, a: &IsogRingElement<R>, b: &IsogRingElement<R>) -> Result<IsogRingElement<R>> {
        self.check(a)?;
        self.check(b)?;
        let base = &self.base;
        let bs: Vec<(Exps, &R::Elem)> = self.support(b);
        let mut raw: HashMap<Exps, R::Elem> = HashMap::new();
        for (ea, ca) in self.support(a) {
            for (eb, cb) in &bs {
                let mut e = ea;
                for i in 0..self.len() {
                    e[i] += eb[i];
                }
                add_into(base, &mut raw, e, base.mul(ca, cb));
            }
        }
        Ok(self.reduce_map(raw))
    }

    fn support<'a>(&self, a: &'a IsogRingElement<R>) -> Vec<(Exps, &'a R::Elem)> {
        a.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(idx, c)| {
                let mut e: Exps = [0; MAX_LEN];
                e[..self.len()].copy_from_slice(&self.exponents(idx));
                (e, c)
            })
            .collect()
    }

    /// a·x_j for 1 ≤ j ≤ q; only the terms that overflow are re-reduced.
    pub fn mul_by_var(&self, a: &IsogRingElement<R>, j: usize) -> Result<IsogRingElement<R>> {
        self.check(a)?;
        if j == 0 {
            return Ok(self.scale(&self.base.param(), a));
        }
        if j > self.len() {
            return Err(Error::IndexOutOfRange { index: j, max: self.len() });
        }
        let v = j - 1;
        let mut out = self.zero();
        let mut overflow: HashMap<Exps, R::Elem> = HashMap::new();
        for (idx, c) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(c) {
                continue;
            }
            let ev = (idx / self.strides[v]) % self.bounds[v];
            if ev + 1 < self.bounds[v] {
                self.base.add_assign(&mut out.coeffs[idx + self.strides[v]], c);
            } else {
                let mut e: Exps = [0; MAX_LEN];
                e[..self.len()].copy_from_slice(&self.exponents(idx));
                e[v] += 1;
                add_into(&self.base, &mut overflow, e, c.clone());
            }
        }
        if !overflow.is_empty() {
            let red = self.reduce_map(overflow);
            for (o, c) in out.coeffs.iter_mut().zip(&red.coeffs) {
                self.base.add_assign(o, c);
            }
        }
        Ok(out)
    }

    /// Reduction of every coefficient to the residue field.
    pub fn residues(&self, a: &IsogRingElement<R>) -> Vec<Fq> {
        a.coeffs.iter().map(|c| self.base.residue(c)).collect()
    }
}

fn add_into<R: BaseRing>(base: &R, map: &mut HashMap<Exps, R::Elem>, e: Exps, c: R::Elem) {
    if base.is_zero(&c) {
        return;
    }
    match map.entry(e) {
        std::collections::hash_map::Entry::Occupied(mut o) => {
            let s = base.add(o.get(), &c);
            if base.is_zero(&s) {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
        std::collections::hash_map::Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}
