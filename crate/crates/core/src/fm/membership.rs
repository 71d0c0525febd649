//! Membership of F_{mn}(x, z) in the ideal (F_m(x, y), F_n(y, z)) of ℤ[x, y, z].
//!
//! ℤ[x,y,z]/(F_m(x,y), F_n(y,z)) is free over ℤ[x] on y^a z^b with a < σ(m),
//! b < σ(n), since each generator has a unit leading coefficient in the
//! variable eliminated. Reducing z first and then y yields that normal form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::poly::{divisor_sum, f_m, IntTrivarPoly};
use crate::error::{Error, Result};

/// Default bound on σ(m)·σ(n)·σ(mn).
pub const DEFAULT_MEMBERSHIP_BUDGET: u64 = 1_000_000;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// Remainder of f modulo g with respect to variable v, where g's leading
/// coefficient in v is ±1. The result has v-degree below deg_v g.
pub fn reduce_by_unit_leading(f: &IntTrivarPoly, g: &IntTrivarPoly, v: usize) -> Result<IntTrivarPoly> {
    let s = g.degree_in(v);
    let lead = g.leading_in(v);
    let unit = lead.len() == 1 && lead.coeff(&[0; 3]).magnitude().is_one();
    if !unit {
        return Err(Error::Config("divisor leading coefficient is not a unit".into()));
    }
    let lead_inv = lead.coeff(&[0; 3]);
    // buckets[j]: coefficient of v^j, keyed by the exponent vector with v cleared
    let top = f.degree_in(v) as usize;
    let mut buckets: Vec<BTreeMap<[u32; 3], BigInt>> = vec![BTreeMap::new(); top + 1];
    for (e, c) in f.terms() {
        let mut k = *e;
        k[v] = 0;
        buckets[e[v] as usize].insert(k, c.clone());
    }
    let tail: Vec<([u32; 3], BigInt)> =
        g.terms().filter(|(e, _)| e[v] < s).map(|(e, c)| (*e, c.clone())).collect();
    for d in (s as usize..=top).rev() {
        let row = std::mem::take(&mut buckets[d]);
        let shift = d as u32 - s;
        for (k, c) in row {
            if c.is_zero() {
                continue;
            }
            // v^s ≡ −lead⁻¹ · tail
            let q = &c * &lead_inv;
            for (te, tc) in &tail {
                let j = (te[v] + shift) as usize;
                let mut key = [k[0] + te[0], k[1] + te[1], k[2] + te[2]];
                key[v] = 0;
                let slot = buckets[j].entry(key).or_default();
                *slot -= &q * tc;
                if slot.is_zero() {
                    buckets[j].remove(&key);
                }
            }
        }
    }
    Ok(IntTrivarPoly::from_terms(buckets.into_iter().enumerate().flat_map(|(j, b)| {
        b.into_iter().map(move |(mut k, c)| {
            k[v] = j as u32;
            (k, c)
        })
    })))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipReport {
    pub m: u64,
    pub n: u64,
    pub remainder_terms: usize,
    pub member: bool,
}

/// Decides F_{mn}(x, z) ∈ (F_m(x, y), F_n(y, z)) by exact reduction.
pub fn ideal_membership_report(m: u64, n: u64, budget: u64) -> Result<MembershipReport> {
    if m == 0 || n == 0 {
        return Err(Error::Config("m and n must be positive".into()));
    }
    let cost = divisor_sum(m)
        .saturating_mul(divisor_sum(n))
        .saturating_mul(divisor_sum(m.saturating_mul(n)));
    if cost > budget {
        return Err(Error::Budget { what: "ideal membership σ(m)σ(n)σ(mn)", needed: cost, budget });
    }
    let fmn: IntTrivarPoly = f_m(m * n).embed([X, Z]);
    let fm: IntTrivarPoly = f_m(m).embed([X, Y]);
    let fn_: IntTrivarPoly = f_m(n).embed([Y, Z]);
    let r1 = reduce_by_unit_leading(&fmn, &fn_, Z)?;
    let r2 = reduce_by_unit_leading(&r1, &fm, Y)?;
    Ok(MembershipReport { m, n, remainder_terms: r2.len(), member: r2.is_zero() })
}

pub fn ideal_membership(m: u64, n: u64) -> Result<bool> {
    Ok(ideal_membership_report(m, n, DEFAULT_MEMBERSHIP_BUDGET)?.member)
}
