//! Small commutative rings given by full operation tables, and the category
//! D(R) whose morphisms m: a → b exist when F_m(a, b) = 0.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::poly::{divisor_pairs, IntBivarPoly};
use crate::algebra::is_prime;
use crate::error::{Error, Result};

/// Largest ring the table construction accepts.
pub const MAX_RING_SIZE: usize = 4096;
/// Default bound on |R|³ · m_max² for the closure check.
pub const DEFAULT_CLOSURE_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteRingSpec {
    /// ℤ/n
    IntegersMod(u32),
    /// F_{p^degree}
    Field { p: u32, degree: u32 },
    /// F_{p^degree}[t]/(t^e)
    Truncated { p: u32, degree: u32, e: u32 },
}

impl fmt::Display for FiniteRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FiniteRingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
            FiniteRingSpec::Field { p, degree } => write!(f, "F_{}", (p as u64).pow(degree)),
            FiniteRingSpec::Truncated { p, degree, e } => {
                write!(f, "F_{}[t]/(t^{e})", (p as u64).pow(degree))
            }
        }
    }
}

/// A finite commutative ring on elements 0..size with 0 and 1 at fixed indices.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    pub spec: FiniteRingSpec,
    size: usize,
    characteristic: u32,
    one: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

/// Monic polynomial over F_p of degree k, coefficients low to high, irreducible,
/// least in the base-p ordering of its lower coefficients.
pub fn irreducible_poly(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    if k == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(k as u32);
    (0..count)
        .map(|code| {
            let mut f = digits(code, p, k);
            f.push(1);
            f
        })
        .find(|f| (1..=k / 2).all(|d| !has_monic_factor_of_degree(f, p, d)))
        .expect("irreducible polynomials exist in every degree")
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (code % p as u64) as u32;
            code /= p as u64;
            d
        })
        .collect()
}

fn has_monic_factor_of_degree(f: &[u32], p: u32, d: usize) -> bool {
    (0..(p as u64).pow(d as u32)).any(|code| {
        let mut g = digits(code, p, d);
        g.push(1);
        poly_rem(f, &g, p).iter().all(|&c| c == 0)
    })
}

/// Remainder of f by a monic g over F_p.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = r.pop().expect("nonempty");
        let shift = r.len() - dg;
        for (i, &gi) in g[..dg].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (c * gi) % p) % p;
        }
    }
    r
}

impl FiniteRing {
    pub fn new(spec: FiniteRingSpec) -> Result<Self> {
        match spec {
            FiniteRingSpec::IntegersMod(n) => {
                if n == 0 {
                    return Err(Error::Config("Z/0 is infinite".into()));
                }
                Self::check_size(n as u64)?;
                let n = n as usize;
                let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
                let mul = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u32).collect();
                let neg = (0..n).map(|a| ((n - a) % n) as u32).collect();
                Ok(FiniteRing { spec, size: n, characteristic: n as u32, one: (1 % n) as u32, add, mul, neg })
            }
            FiniteRingSpec::Field { p, degree } => Self::tower(spec, p, degree, 1),
            FiniteRingSpec::Truncated { p, degree, e } => Self::tower(spec, p, degree, e),
        }
    }

    fn check_size(size: u64) -> Result<()> {
        if size > MAX_RING_SIZE as u64 {
            return Err(Error::SizeCap { what: "finite ring", size, cap: MAX_RING_SIZE as u64 });
        }
        Ok(())
    }

    /// F_p[s]/(h(s))[t]/(t^e) with deg h = k; element index Σ c_{ij} p^{jk+i} for c_{ij} s^i t^j.
    fn tower(spec: FiniteRingSpec, p: u32, k: u32, e: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k == 0 || e == 0 {
            return Err(Error::Config("degree and nilpotency order must be positive".into()));
        }
        let len = (k * e) as usize;
        let size = (p as u64).checked_pow(k * e).ok_or(Error::SizeCap {
            what: "finite ring",
            size: u64::MAX,
            cap: MAX_RING_SIZE as u64,
        })?;
        Self::check_size(size)?;
        let size = size as usize;
        let h = irreducible_poly(p, k);
        let k = k as usize;
        let elems: Vec<Vec<u32>> = (0..size as u64).map(|c| digits(c, p, len)).collect();
        let encode = |v: &[u32]| v.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64) as u32;
        let fq_mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
            let mut prod = vec![0u32; 2 * k - 1];
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ai * bj) % p;
                }
            }
            let mut r = poly_rem(&prod, &h, p);
            r.resize(k, 0);
            r
        };
        let mut add = vec![0u32; size * size];
        let mut mul = vec![0u32; size * size];
        for (x, a) in elems.iter().enumerate() {
            for (y, b) in elems.iter().enumerate() {
                let s: Vec<u32> = a.iter().zip(b).map(|(u, v)| (u + v) % p).collect();
                add[x * size + y] = encode(&s);
                let mut m = vec![0u32; len];
                for i in 0..e as usize {
                    for j in 0..e as usize - i {
                        let c = fq_mul(&a[i * k..(i + 1) * k], &b[j * k..(j + 1) * k]);
                        for (t, ct) in c.into_iter().enumerate() {
                            let slot = &mut m[(i + j) * k + t];
                            *slot = (*slot + ct) % p;
                        }
                    }
                }
                mul[x * size + y] = encode(&m);
            }
        }
        let neg = elems
            .iter()
            .map(|a| encode(&a.iter().map(|&c| (p - c) % p).collect::<Vec<_>>()))
            .collect();
        Ok(FiniteRing { spec, size, characteristic: p, one: 1, add, mul, neg })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize]
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, self.one);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of an integer.
    pub fn from_bigint(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.characteristic)).to_u32().expect("fits");
        // 1 + 1 + ⋯ + 1, r times
        (0..r).fold(self.zero(), |acc, _| self.add(acc, self.one))
    }

    /// F_m(a, b) from the factored form.
    pub fn eval_f(&self, m: u64, a: u32, b: u32) -> u32 {
        divisor_pairs(m)
            .iter()
            .fold(self.one, |acc, &(d, e)| self.mul(acc, self.sub(self.pow(a, d), self.pow(b, e))))
    }

    /// Evaluation of an expanded polynomial.
    pub fn eval_poly(&self, f: &IntBivarPoly, a: u32, b: u32) -> u32 {
        f.terms().fold(self.zero(), |acc, (e, c)| {
            let t = self.mul(self.pow(a, e[0] as u64), self.pow(b, e[1] as u64));
            self.add(acc, self.mul(self.from_bigint(c), t))
        })
    }

    pub fn is_domain(&self) -> bool {
        (1..self.size as u32).all(|a| (1..self.size as u32).all(|b| self.mul(a, b) != 0))
    }
}

/// A failure of composition: m: a → b and n: b → c exist but mn: a → c does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub m: u64,
    pub n: u64,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub ring: String,
    pub size: usize,
    pub m_max: u64,
    /// Composable pairs (m: a → b, n: b → c) examined.
    pub composable: u64,
    pub counterexample_count: u64,
    /// The first few failures in (m, n, a, b, c) order.
    pub counterexamples: Vec<Counterexample>,
    pub identities_ok: bool,
}

impl ClosureReport {
    pub fn pass(&self) -> bool {
        self.counterexample_count == 0 && self.identities_ok
    }
}

const KEPT_COUNTEREXAMPLES: usize = 16;

/// Exhaustive check that morphisms of D(R) compose, for labels m, n ≤ m_max.
pub fn category_closure_check(spec: FiniteRingSpec, m_max: u64, budget: u64) -> Result<ClosureReport> {
    if m_max == 0 {
        return Err(Error::Config("m_max must be positive".into()));
    }
    let ring = FiniteRing::new(spec)?;
    let s = ring.size();
    let cost = (s as u64).pow(3).saturating_mul(m_max * m_max);
    if cost > budget {
        return Err(Error::Budget { what: "category closure |R|^3 m_max^2", needed: cost, budget });
    }
    // hom[m][a·s + b] ⇔ F_m(a, b) = 0, for m ≤ m_max²
    let top = m_max * m_max;
    let hom: Vec<Vec<bool>> = (0..=top)
        .map(|m| {
            if m == 0 {
                return Vec::new();
            }
            (0..s * s).map(|i| ring.eval_f(m, (i / s) as u32, (i % s) as u32) == 0).collect()
        })
        .collect();
    let identities_ok = (0..s).all(|a| hom[1][a * s + a]);
    let mut composable = 0u64;
    let mut count = 0u64;
    let mut kept = Vec::new();
    for m in 1..=m_max {
        for n in 1..=m_max {
            let (hm, hn, hmn) = (&hom[m as usize], &hom[n as usize], &hom[(m * n) as usize]);
            for a in 0..s {
                for b in 0..s {
                    if !hm[a * s + b] {
                        continue;
                    }
                    for c in 0..s {
                        if hn[b * s + c] {
                            composable += 1;
                            if !hmn[a * s + c] {
                                count += 1;
                                if kept.len() < KEPT_COUNTEREXAMPLES {
                                    kept.push(Counterexample { m, n, a: a as u32, b: b as u32, c: c as u32 });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(ClosureReport {
        ring: spec.to_string(),
        size: s,
        m_max,
        composable,
        counterexample_count: count,
        counterexamples: kept,
        identities_ok,
    })
}
