//! Polynomials k[x] and truncated power series k⟦x⟧/(x^T).

use std::fmt;

use super::field::{FieldSpec, Fq};
use crate::error::{Error, Result};

/// A polynomial over k with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Fq>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fq) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Fq, deg: usize) -> Poly {
        let mut coeffs = vec![Fq::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, trunc: usize) -> TruncSeries {
        let mut coeffs = vec![Fq::ZERO; trunc];
        for (i, c) in self.coeffs.iter().take(trunc).enumerate() {
            coeffs[i] = *c;
        }
        TruncSeries { coeffs }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Fq]) -> fmt::Result {
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{c}")?,
            1 => write!(f, "({c})x")?,
            _ => write!(f, "({c})x^{i}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Σ c_i x^i mod x^T; always exactly T coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Fq>,
}

impl TruncSeries {
    pub fn zero(trunc: usize) -> TruncSeries {
        TruncSeries { coeffs: vec![Fq::ZERO; trunc] }
    }

    /// Builds a series from the leading coefficients, padding or cutting at `trunc`.
    pub fn from_coeffs(trunc: usize, coeffs: &[Fq]) -> TruncSeries {
        Poly::from_coeffs(coeffs.to_vec()).truncate(trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Fq::is_zero)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The polynomial representative of degree < T.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs)?;
        write!(f, " + O(x^{})", self.coeffs.len())
    }
}

/// f^{(p^r)}: raise every coefficient to the p^r-th power, leaving exponents alone.
pub fn frobenius_twist(k: &FieldSpec, f: &TruncSeries, r: u32) -> TruncSeries {
    TruncSeries { coeffs: f.coeffs.iter().map(|&c| k.frobenius(c, r)).collect() }
}

pub fn poly_frobenius(k: &FieldSpec, f: &Poly, r: u32) -> Poly {
    Poly::from_coeffs(f.coeffs.iter().map(|&c| k.frobenius(c, r)).collect())
}

/// Product mod x^T; both operands must share the truncation order.
pub fn series_mul(k: &FieldSpec, a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    if a.trunc() != b.trunc() {
        return Err(Error::TruncationMismatch(a.trunc(), b.trunc()));
    }
    let t = a.trunc();
    let mut out = vec![Fq::ZERO; t];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.coeffs[..t - i].iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] = k.add(out[i + j], k.mul(ai, bj));
            }
        }
    }
    Ok(TruncSeries { coeffs: out })
}

pub fn series_add(k: &FieldSpec, a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    if a.trunc() != b.trunc() {
        return Err(Error::TruncationMismatch(a.trunc(), b.trunc()));
    }
    Ok(TruncSeries {
        coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| k.add(x, y)).collect(),
    })
}

pub fn poly_add(k: &FieldSpec, a: &Poly, b: &Poly) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::from_coeffs((0..n).map(|i| k.add(a.coeff(i), b.coeff(i))).collect())
}

pub fn poly_neg(k: &FieldSpec, a: &Poly) -> Poly {
    Poly { coeffs: a.coeffs.iter().map(|&c| k.neg(c)).collect() }
}

pub fn poly_scale(k: &FieldSpec, c: Fq, a: &Poly) -> Poly {
    if c.is_zero() {
        return Poly::zero();
    }
    Poly::from_coeffs(a.coeffs.iter().map(|&x| k.mul(c, x)).collect())
}

pub fn poly_mul(k: &FieldSpec, a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![Fq::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, &bj) in b.coeffs.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] = k.add(out[i + j], k.mul(ai, bj));
            }
        }
    }
    Poly::from_coeffs(out)
}

/// Evaluates a polynomial at a field point.
pub fn poly_eval(k: &FieldSpec, f: &[Fq], a: Fq) -> Fq {
    f.iter().rev().fold(Fq::ZERO, |acc, &c| k.add(k.mul(acc, a), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: &FieldSpec, t: usize, cs: &[i64]) -> TruncSeries {
        let v: Vec<Fq> = cs.iter().map(|&c| k.from_int(c)).collect();
        TruncSeries::from_coeffs(t, &v)
    }

    #[test]
    fn char_two_square() {
        let k = FieldSpec::prime(2).unwrap();
        let a = s(&k, 4, &[1, 1]);
        assert_eq!(series_mul(&k, &a, &a).unwrap(), s(&k, 4, &[1, 0, 1]));
    }

    #[test]
    fn truncation_kills_top_degree() {
        let k = FieldSpec::prime(3).unwrap();
        let top = s(&k, 5, &[0, 0, 0, 0, 1]);
        let x = s(&k, 5, &[0, 1]);
        assert!(series_mul(&k, &top, &x).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares_f3() {
        let k = FieldSpec::prime(3).unwrap();
        let a = s(&k, 4, &[1, 1]);
        let b = s(&k, 4, &[1, -1]);
        assert_eq!(series_mul(&k, &a, &b).unwrap(), s(&k, 4, &[1, 0, 2]));
    }

    #[test]
    fn mismatched_truncation_is_an_error() {
        let k = FieldSpec::prime(3).unwrap();
        let err = series_mul(&k, &TruncSeries::zero(3), &TruncSeries::zero(4)).unwrap_err();
        assert_eq!(err, Error::TruncationMismatch(3, 4));
    }

    #[test]
    fn frobenius_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let f = s(&f2, 6, &[0, 1, 1]);
        assert_eq!(frobenius_twist(&f2, &f, 1), f);
        assert_eq!(frobenius_twist(&f2, &f, 0), f);

        let f4 = FieldSpec::quadratic(2).unwrap();
        let u = f4.generator();
        let ux = TruncSeries::from_coeffs(6, &[Fq::ZERO, u]);
        let twisted = frobenius_twist(&f4, &ux, 1);
        assert_eq!(twisted.coeff(1), Fq::new(1, 1));
        assert_eq!(frobenius_twist(&f4, &ux, 2), ux);
    }
}
