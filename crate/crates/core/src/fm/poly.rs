//! Sparse multivariate polynomials over ℤ and the polynomials F_m.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Σ c_e x^e with exponent vectors of length N; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPoly<const N: usize> {
    terms: BTreeMap<[u32; N], BigInt>,
}

pub type IntBivarPoly = IntPoly<2>;
pub type IntTrivarPoly = IntPoly<3>;

impl<const N: usize> IntPoly<N> {
    pub fn zero() -> Self {
        IntPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial([0; N], BigInt::one())
    }

    pub fn monomial(e: [u32; N], c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u32; N], BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32; N]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: [u32; N], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut e = *a;
                for (ei, bi) in e.iter_mut().zip(b) {
                    *ei += bi;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Largest exponent of variable `v`.
    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficient of v^{deg_v} as a polynomial in the other variables.
    pub fn leading_in(&self, v: usize) -> Self {
        let d = self.degree_in(v);
        Self::from_terms(self.terms.iter().filter(|(e, _)| e[v] == d).map(|(e, c)| {
            let mut e = *e;
            e[v] = 0;
            (e, c.clone())
        }))
    }

    /// Coefficients reduced into [0, n).
    pub fn reduce_mod(&self, n: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.mod_floor(n))))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Substitute variables: new exponent vector j receives source exponent i at `map[i]`.
    pub fn embed<const M: usize>(&self, map: [usize; N]) -> IntPoly<M> {
        IntPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut t = [0u32; M];
            for (i, &j) in map.iter().enumerate() {
                t[j] += e[i];
            }
            (t, c.clone())
        }))
    }
}

/// Divisor pairs (d, e) with d·e = m, sorted by d.
pub fn divisor_pairs(m: u64) -> Vec<(u64, u64)> {
    (1..=m).filter(|d| m % d == 0).map(|d| (d, m / d)).collect()
}

/// σ(m), the sum of the divisors of m.
pub fn divisor_sum(m: u64) -> u64 {
    divisor_pairs(m).iter().map(|p| p.0).sum()
}

/// F_m(x, y) = ∏_{de=m} (x^d − y^e), expanded. Factors are multiplied in
/// increasing order of d + e.
pub fn f_m(m: u64) -> IntBivarPoly {
    assert!(m >= 1, "F_m needs m >= 1");
    let mut pairs = divisor_pairs(m);
    pairs.sort_by_key(|&(d, e)| (d + e, d));
    pairs.iter().fold(IntBivarPoly::one(), |acc, &(d, e)| {
        let factor = IntBivarPoly::from_terms([
            ([d as u32, 0], BigInt::one()),
            ([0, e as u32], -BigInt::one()),
        ]);
        acc.mul(&factor)
    })
}
