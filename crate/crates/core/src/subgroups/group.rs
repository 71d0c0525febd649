//! Finite abelian p-groups ∏ ℤ/p^{e_i} and their subgroups.
//!
//! A subgroup H ⊆ G is stored as the lattice L with ⊕ p^{e_i}ℤ ⊆ L ⊆ ℤ^n and
//! L/⊕p^{e_i}ℤ = H, in upper-triangular Hermite normal form: row i has zeros
//! left of column i, pivot d_i > 0 at column i, and entries right of the pivot
//! reduced into [0, d_j).

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{is_prime, smith_invariants, MatrixZ};
use crate::error::{Error, Result};

/// Largest group order accepted by the enumerator.
pub const MAX_GROUP_ORDER: u64 = 1 << 24;
/// Largest number of subgroups the enumerator will produce.
pub const MAX_SUBGROUPS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianPGroup {
    pub p: u32,
    /// Non-increasing, all ≥ 1.
    pub exponents: Vec<u32>,
}

impl AbelianPGroup {
    pub fn new(p: u32, mut exponents: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if exponents.contains(&0) {
            return Err(Error::Config("cyclic factors need exponent >= 1".into()));
        }
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        let g = AbelianPGroup { p, exponents };
        let order = g.order_checked();
        match order {
            Some(o) if o <= MAX_GROUP_ORDER => Ok(g),
            _ => Err(Error::SizeCap {
                what: "group order",
                size: order.unwrap_or(u64::MAX),
                cap: MAX_GROUP_ORDER,
            }),
        }
    }

    /// (ℤ/p)^r.
    pub fn elementary(p: u32, r: u32) -> Result<Self> {
        Self::new(p, vec![1; r as usize])
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    fn order_checked(&self) -> Option<u64> {
        let e: u32 = self.exponents.iter().sum();
        (self.p as u64).checked_pow(e)
    }

    pub fn order(&self) -> u64 {
        self.order_checked().expect("validated")
    }

    /// log_p |G|.
    pub fn log_order(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_elementary(&self) -> bool {
        self.exponents.iter().all(|&e| e == 1)
    }

    fn moduli(&self) -> Vec<i64> {
        self.exponents.iter().map(|&e| (self.p as i64).pow(e)).collect()
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let m = self.moduli();
        let n = m.len();
        let hnf = (0..n).map(|i| (0..n).map(|j| if i == j { m[i] } else { 0 }).collect()).collect();
        Subgroup { hnf, log_order: 0 }
    }

    pub fn whole(&self) -> Subgroup {
        let n = self.rank();
        let hnf = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Subgroup { hnf, log_order: self.log_order() }
    }

    /// Every subgroup (of order p^k if given), sorted by order and then canonical form.
    pub fn enumerate_subgroups(&self, log_order: Option<u32>) -> Result<Vec<Subgroup>> {
        let moduli = self.moduli();
        let n = moduli.len();
        let total: u32 = self.log_order();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n);
        self.fill_rows(&moduli, n, 0, &mut rows, total, log_order, &mut out)?;
        out.sort();
        Ok(out)
    }

    /// Chooses rows bottom-up so that entries right of each pivot can be reduced
    /// modulo the pivots already fixed.
    #[allow(clippy::too_many_arguments)]
    fn fill_rows(
        &self,
        moduli: &[i64],
        n: usize,
        depth: usize,
        rows: &mut Vec<Vec<i64>>,
        total: u32,
        log_order: Option<u32>,
        out: &mut Vec<Subgroup>,
    ) -> Result<()> {
        if depth == n {
            // rows were pushed bottom-up
            let hnf: Vec<Vec<i64>> = rows.iter().rev().cloned().collect();
            if contains_all(&hnf, moduli) {
                let index_log: u32 = hnf.iter().enumerate().map(|(i, r)| log_p(r[i], self.p)).sum();
                let k = total - index_log;
                if log_order.map_or(true, |want| want == k) {
                    if out.len() >= MAX_SUBGROUPS {
                        return Err(Error::SizeCap {
                            what: "subgroup count",
                            size: out.len() as u64 + 1,
                            cap: MAX_SUBGROUPS as u64,
                        });
                    }
                    out.push(Subgroup { hnf, log_order: k });
                }
            }
            return Ok(());
        }
        let i = n - 1 - depth;
        let pivots_right: Vec<i64> = rows.iter().rev().map(|r| r[r.iter().position(|&v| v != 0).expect("pivot")]).collect();
        for e in 0..=self.exponents[i] {
            let d = (self.p as i64).pow(e);
            // entries in columns i+1..n, each in [0, pivot_j)
            let mut tail = vec![0i64; n - i - 1];
            loop {
                let mut row = vec![0i64; n];
                row[i] = d;
                row[i + 1..].copy_from_slice(&tail);
                rows.push(row);
                self.fill_rows(moduli, n, depth + 1, rows, total, log_order, out)?;
                rows.pop();
                if !advance(&mut tail, &pivots_right) {
                    break;
                }
            }
        }
        Ok(())
    }

    /// Isomorphism type of a subgroup, as a group.
    pub fn subgroup_type(&self, h: &Subgroup) -> Result<AbelianPGroup> {
        // relations of L/Λ: rows of Λ written in the basis of L
        let moduli = self.moduli();
        let n = moduli.len();
        let mut rel = Vec::with_capacity(n);
        for (i, &m) in moduli.iter().enumerate() {
            let mut v = vec![0i64; n];
            v[i] = m;
            rel.push(solve_upper(&h.hnf, &v).expect("Λ ⊆ L"));
        }
        let inv = smith_invariants(&MatrixZ::from_rows(&rel));
        let one = BigInt::from(1);
        let exps: Vec<u32> = inv
            .iter()
            .filter(|d| **d != one)
            .map(|d| log_p(d.to_i64().expect("small"), self.p))
            .collect();
        if exps.is_empty() {
            return Ok(AbelianPGroup { p: self.p, exponents: Vec::new() });
        }
        AbelianPGroup::new(self.p, exps)
    }
}

/// Odometer over [0, bound_j) per slot; false once it wraps.
fn advance(tail: &mut [i64], bounds: &[i64]) -> bool {
    for (t, &b) in tail.iter_mut().zip(bounds).rev() {
        *t += 1;
        if *t < b {
            return true;
        }
        *t = 0;
    }
    false
}

fn log_p(mut v: i64, p: u32) -> u32 {
    let mut e = 0;
    while v > 1 {
        debug_assert_eq!(v % p as i64, 0);
        v /= p as i64;
        e += 1;
    }
    e
}

fn contains_all(hnf: &[Vec<i64>], moduli: &[i64]) -> bool {
    moduli.iter().enumerate().all(|(i, &m)| {
        let mut v = vec![0i64; moduli.len()];
        v[i] = m;
        solve_upper(hnf, &v).is_some()
    })
}

/// Integer x with x·H = v for upper-triangular H, if it exists.
fn solve_upper(hnf: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = v.len();
    let mut rem = v.to_vec();
    let mut x = vec![0i64; n];
    for i in 0..n {
        let d = hnf[i][i];
        if rem[i] % d != 0 {
            return None;
        }
        let c = rem[i] / d;
        x[i] = c;
        for (rj, hj) in rem.iter_mut().zip(&hnf[i]).skip(i) {
            *rj -= c * hj;
        }
    }
    Some(x)
}

/// A subgroup in canonical lattice form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subgroup {
    pub hnf: Vec<Vec<i64>>,
    /// log_p of the order.
    pub log_order: u32,
}

impl Subgroup {
    pub fn is_trivial(&self, g: &AbelianPGroup) -> bool {
        self.log_order == 0 && g.rank() == self.hnf.len()
    }

    /// H ⊆ K.
    pub fn is_subgroup_of(&self, k: &Subgroup) -> bool {
        self.log_order <= k.log_order && self.hnf.iter().all(|row| solve_upper(&k.hnf, row).is_some())
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// By order, then by canonical matrix; refines inclusion.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.log_order.cmp(&other.log_order).then_with(|| self.hnf.cmp(&other.hnf))
    }
}

/// Number of order-p^k subgroups of G isomorphic to (ℤ/p)^k.
pub fn count_elementary(g: &AbelianPGroup, k: u32) -> Result<usize> {
    let mut n = 0;
    for h in g.enumerate_subgroups(Some(k))? {
        if g.subgroup_type(&h)?.is_elementary() {
            n += 1;
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isogeny::sigma;

    #[test]
    fn small_counts() {
        let v4 = AbelianPGroup::elementary(2, 2).unwrap();
        assert_eq!(v4.enumerate_subgroups(Some(1)).unwrap().len(), 3);
        assert_eq!(v4.enumerate_subgroups(None).unwrap().len(), 5);
        for p in [2, 3, 5] {
            let c = AbelianPGroup::new(p, vec![2]).unwrap();
            assert_eq!(c.enumerate_subgroups(None).unwrap().len(), 3);
            let g = AbelianPGroup::new(p, vec![3, 3]).unwrap();
            assert_eq!(g.enumerate_subgroups(Some(1)).unwrap().len(), p as usize + 1);
        }
        // Gaussian binomials for (Z/2)^3: 1, 7, 7, 1
        let e3 = AbelianPGroup::elementary(2, 3).unwrap();
        let counts: Vec<usize> = (0..=3).map(|k| e3.enumerate_subgroups(Some(k)).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 7, 7, 1]);
    }

    #[test]
    fn counts_match_sigma() {
        for p in [2u32, 3] {
            for m in 1..=4u32 {
                let g = AbelianPGroup::new(p, vec![m, m]).unwrap();
                for r in 0..=m {
                    assert_eq!(g.enumerate_subgroups(Some(r)).unwrap().len(), sigma(p, r), "p={p} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn types_and_inclusion() {
        let g = AbelianPGroup::new(2, vec![2, 2]).unwrap();
        let order4 = g.enumerate_subgroups(Some(2)).unwrap();
        let types: Vec<_> = order4.iter().map(|h| g.subgroup_type(h).unwrap().exponents).collect();
        assert_eq!(types.iter().filter(|t| **t == vec![1, 1]).count(), 1);
        assert_eq!(types.iter().filter(|t| **t == vec![2]).count(), 6);
        let triv = g.trivial_subgroup();
        let whole = g.whole();
        assert!(order4.iter().all(|h| triv.is_subgroup_of(h) && h.is_subgroup_of(&whole)));
        assert!(!whole.is_subgroup_of(&order4[0]));
        assert_eq!(g.subgroup_type(&whole).unwrap(), g);
        assert!(g.subgroup_type(&triv).unwrap().exponents.is_empty());
        assert_eq!(count_elementary(&g, 2).unwrap(), 1);
    }

    #[test]
    fn caps() {
        assert!(AbelianPGroup::new(4, vec![1]).is_err());
        assert!(AbelianPGroup::new(3, vec![20]).is_err());
        assert!(AbelianPGroup::new(3, vec![0]).is_err());
    }
}
