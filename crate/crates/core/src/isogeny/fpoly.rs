//! The relation polynomials F_{p^r}(u, v) = ∏_{i+j=r} (u^{p^i} − v^{p^j}).

use std::collections::BTreeMap;

use crate::algebra::{FieldSpec, Fq};

/// σ(p^r) = 1 + p + ... + p^r.
pub fn sigma(p: u32, r: u32) -> usize {
    (0..=r).map(|i| (p as usize).pow(i)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FIsogPoly {
    pub p: u32,
    pub r: u32,
    /// `(u_exp, v_exp, coeff)` sorted by `(u_exp, v_exp)`, zero terms removed.
    pub terms: Vec<(u32, u32, i64)>,
}

pub fn f_poly(p: u32, r: u32) -> FIsogPoly {
    let mut acc: BTreeMap<(u32, u32), i64> = BTreeMap::from([((0, 0), 1)]);
    for i in 0..=r {
        let du = p.pow(i);
        let dv = p.pow(r - i);
        let mut next = BTreeMap::new();
        for (&(a, b), &c) in &acc {
            *next.entry((a + du, b)).or_insert(0) += c;
            *next.entry((a, b + dv)).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        acc = next;
    }
    FIsogPoly { p, r, terms: acc.into_iter().map(|((a, b), c)| (a, b, c)).collect() }
}

impl FIsogPoly {
    pub fn degree_v(&self) -> u32 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    pub fn degree_u(&self) -> u32 {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn coeff(&self, u_exp: u32, v_exp: u32) -> i64 {
        self.terms
            .iter()
            .find(|t| t.0 == u_exp && t.1 == v_exp)
            .map_or(0, |t| t.2)
    }

    /// Coefficient of v^{σ}, which is the only term of top v-degree.
    pub fn leading_v_coeff(&self) -> i64 {
        self.coeff(0, self.degree_v())
    }

    /// F(v, u).
    pub fn swapped(&self) -> FIsogPoly {
        let mut terms: Vec<_> = self.terms.iter().map(|&(a, b, c)| (b, a, c)).collect();
        terms.sort_unstable();
        FIsogPoly { p: self.p, r: self.r, terms }
    }

    pub fn eval(&self, k: &FieldSpec, u: Fq, v: Fq) -> Fq {
        self.terms.iter().fold(Fq::ZERO, |acc, &(a, b, c)| {
            let m = k.mul(k.pow(u, a as u64), k.pow(v, b as u64));
            k.add(acc, k.mul(k.from_int(c), m))
        })
    }

    /// Solves for the top v-power: v^σ = Σ c'·u^a v^b over the remaining terms, in k.
    pub fn v_tail(&self, k: &FieldSpec) -> Vec<(u32, u32, Fq)> {
        let sigma = self.degree_v();
        let lc = self.leading_v_coeff();
        debug_assert!(lc == 1 || lc == -1);
        self.terms
            .iter()
            .filter(|t| t.1 != sigma)
            .map(|&(a, b, c)| (a, b, k.from_int(-lc * c)))
            .filter(|t| !t.2.is_zero())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_zero_is_difference() {
        for p in [2, 3, 5] {
            assert_eq!(f_poly(p, 0).terms, vec![(0, 1, -1), (1, 0, 1)]);
        }
    }

    #[test]
    fn p2_r1_expansion() {
        // (u - v^2)(u^2 - v) = u^3 - u^2 v^2 - u v + v^3
        let f = f_poly(2, 1);
        assert_eq!(f.terms, vec![(0, 3, 1), (1, 1, -1), (2, 2, -1), (3, 0, 1)]);
    }

    #[test]
    fn degrees_and_units() {
        for p in [2, 3, 5] {
            for r in 0..=4 {
                let f = f_poly(p, r);
                let s = sigma(p, r) as u32;
                assert_eq!(f.degree_v(), s);
                assert_eq!(f.degree_u(), s);
                assert_eq!(f.terms.iter().filter(|t| t.1 == s).count(), 1);
                assert_eq!(f.leading_v_coeff(), if r % 2 == 0 { -1 } else { 1 });
                assert!(f.terms.iter().all(|t| t.2 == 1 || t.2 == -1));
                assert_eq!(f.terms.len(), 1 << (r + 1));
                let sw = f.swapped();
                let sign = if r % 2 == 0 { -1 } else { 1 };
                let neg: Vec<_> = f.terms.iter().map(|&(a, b, c)| (a, b, sign * c)).collect();
                assert_eq!(sw.terms, neg);
            }
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(2, 2), 7);
        assert_eq!(sigma(3, 2), 13);
        assert_eq!(sigma(5, 0), 1);
    }

    /// g = u^{p^a} − v^{p^b} divides F_{p^r} exactly when a + b = r.
    #[test]
    fn each_factor_divides() {
        for p in [2u32, 3] {
            for r in 0..=3 {
                let f = f_poly(p, r);
                for a in 0..=r {
                    let (du, dv) = (p.pow(a), p.pow(r - a));
                    // divide by v^{dv} - u^{du} (monic in v)
                    let mut rem: BTreeMap<(u32, u32), i64> =
                        f.terms.iter().map(|&(x, y, c)| ((x, y), c)).collect();
                    loop {
                        let top = rem.iter().filter(|(k, c)| k.1 >= dv && **c != 0).last();
                        let Some((&(x, y), &c)) = top else { break };
                        rem.remove(&(x, y));
                        *rem.entry((x + du, y - dv)).or_insert(0) += c;
                    }
                    rem.retain(|_, c| *c != 0);
                    assert!(rem.is_empty(), "p={p} r={r} a={a}");
                }
            }
        }
    }
}
