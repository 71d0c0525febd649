//! Coefficient rings for the deformation parameter x_0.
//!
//! The isogeny rings are free modules over k[x_0] (or k⟦x_0⟧); every
//! computation is carried out after choosing where x_0 lives:
//!
//! * [`PolyRing`]: exact polynomials k[x], no truncation.
//! * [`SeriesRing`]: truncated series k⟦x⟧/(x^T).
//! * [`PointRing`]: the field k with x ↦ a, a specialization to a closed point.

use std::fmt::Debug;

use super::field::{FieldSpec, Fq};
use super::series::{
    poly_add, poly_eval, poly_mul, poly_neg, poly_scale, series_add, series_mul, Poly,
    TruncSeries,
};

pub trait BaseRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn field(&self) -> &FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn from_scalar(&self, c: Fq) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, c: Fq, a: &Self::Elem) -> Self::Elem;
    /// The image of the deformation parameter x.
    fn param(&self) -> Self::Elem;
    /// Σ c_i x^i evaluated in this ring.
    fn from_poly(&self, coeffs: &[Fq]) -> Self::Elem;
    /// Reduction to the residue field at the specialization point.
    fn residue(&self, a: &Self::Elem) -> Fq;

    fn one(&self) -> Self::Elem {
        self.from_scalar(Fq::ONE)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn param_pow(&self, e: u32) -> Self::Elem {
        let x = self.param();
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, &x);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub k: FieldSpec,
}

impl PolyRing {
    pub fn new(k: FieldSpec) -> Self {
        PolyRing { k }
    }
}

impl BaseRing for PolyRing {
    type Elem = Poly;

    fn field(&self) -> &FieldSpec {
        &self.k
    }
    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn from_scalar(&self, c: Fq) -> Poly {
        Poly::constant(c)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        poly_add(&self.k, a, b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        poly_neg(&self.k, a)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        poly_mul(&self.k, a, b)
    }
    fn scale(&self, c: Fq, a: &Poly) -> Poly {
        poly_scale(&self.k, c, a)
    }
    fn param(&self) -> Poly {
        Poly::monomial(Fq::ONE, 1)
    }
    fn from_poly(&self, coeffs: &[Fq]) -> Poly {
        Poly::from_coeffs(coeffs.to_vec())
    }
    fn residue(&self, a: &Poly) -> Fq {
        a.coeff(0)
    }
    fn param_pow(&self, e: u32) -> Poly {
        Poly::monomial(Fq::ONE, e as usize)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesRing {
    pub k: FieldSpec,
    pub trunc: usize,
}

impl SeriesRing {
    pub fn new(k: FieldSpec, trunc: usize) -> Self {
        assert!(trunc >= 1, "truncation order must be positive");
        SeriesRing { k, trunc }
    }
}

impl BaseRing for SeriesRing {
    type Elem = TruncSeries;

    fn field(&self) -> &FieldSpec {
        &self.k
    }
    fn zero(&self) -> TruncSeries {
        TruncSeries::zero(self.trunc)
    }
    fn from_scalar(&self, c: Fq) -> TruncSeries {
        TruncSeries::from_coeffs(self.trunc, &[c])
    }
    fn is_zero(&self, a: &TruncSeries) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        series_add(&self.k, a, b).expect("series of one ring share truncation")
    }
    fn neg(&self, a: &TruncSeries) -> TruncSeries {
        let c: Vec<Fq> = a.coeffs().iter().map(|&c| self.k.neg(c)).collect();
        TruncSeries::from_coeffs(self.trunc, &c)
    }
    fn mul(&self, a: &TruncSeries, b: &TruncSeries) -> TruncSeries {
        series_mul(&self.k, a, b).expect("series of one ring share truncation")
    }
    fn scale(&self, c: Fq, a: &TruncSeries) -> TruncSeries {
        let v: Vec<Fq> = a.coeffs().iter().map(|&x| self.k.mul(c, x)).collect();
        TruncSeries::from_coeffs(self.trunc, &v)
    }
    fn param(&self) -> TruncSeries {
        TruncSeries::from_coeffs(self.trunc, &[Fq::ZERO, Fq::ONE])
    }
    fn from_poly(&self, coeffs: &[Fq]) -> TruncSeries {
        TruncSeries::from_coeffs(self.trunc, coeffs)
    }
    fn residue(&self, a: &TruncSeries) -> Fq {
        a.coeff(0)
    }
    fn param_pow(&self, e: u32) -> TruncSeries {
        let e = e as usize;
        let mut v = vec![Fq::ZERO; e.min(self.trunc) + 1];
        if e < self.trunc {
            v[e] = Fq::ONE;
        }
        TruncSeries::from_coeffs(self.trunc, &v)
    }
}

/// The residue field k with x_0 specialized to `point`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointRing {
    pub k: FieldSpec,
    pub point: Fq,
}

impl PointRing {
    pub fn new(k: FieldSpec, point: Fq) -> Self {
        PointRing { k, point }
    }

    pub fn closed_point(k: FieldSpec) -> Self {
        PointRing { k, point: Fq::ZERO }
    }
}

impl BaseRing for PointRing {
    type Elem = Fq;

    fn field(&self) -> &FieldSpec {
        &self.k
    }
    fn zero(&self) -> Fq {
        Fq::ZERO
    }
    fn from_scalar(&self, c: Fq) -> Fq {
        c
    }
    fn is_zero(&self, a: &Fq) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        self.k.add(*a, *b)
    }
    fn neg(&self, a: &Fq) -> Fq {
        self.k.neg(*a)
    }
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        self.k.mul(*a, *b)
    }
    fn scale(&self, c: Fq, a: &Fq) -> Fq {
        self.k.mul(c, *a)
    }
    fn param(&self) -> Fq {
        self.point
    }
    fn from_poly(&self, coeffs: &[Fq]) -> Fq {
        poly_eval(&self.k, coeffs, self.point)
    }
    fn residue(&self, a: &Fq) -> Fq {
        *a
    }
    fn param_pow(&self, e: u32) -> Fq {
        self.k.pow(self.point, e as u64)
    }
}
