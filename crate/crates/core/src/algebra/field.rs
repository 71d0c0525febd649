//! Prime fields F_p and quadratic extensions F_{p^2}.

use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of F_q stored as residues `c[0] + c[1]·t` modulo the field modulus.
/// For prime fields `c[1]` is always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq {
    pub c: [u32; 2],
}

impl Fq {
    pub const ZERO: Fq = Fq { c: [0, 0] };
    pub const ONE: Fq = Fq { c: [1, 0] };

    pub const fn new(c0: u32, c1: u32) -> Fq {
        Fq { c: [c0, c1] }
    }

    pub const fn scalar(c0: u32) -> Fq {
        Fq { c: [c0, 0] }
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0]
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c {
            [a, 0] => write!(f, "{a}"),
            [0, 1] => write!(f, "t"),
            [0, b] => write!(f, "{b}t"),
            [a, 1] => write!(f, "{a}+t"),
            [a, b] => write!(f, "{a}+{b}t"),
        }
    }
}

/// The field k = F_{p^m}, m ∈ {1, 2}. For m = 2 the field is F_p[t]/(t^2 + c1·t + c0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    /// `[c0, c1]` of the monic modulus `t^2 + c1 t + c0`; unused when m = 1.
    modulus: [u32; 2],
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(FieldSpec { p, m: 1, modulus: [0, 0] })
    }

    /// F_{p^2} with the first irreducible `t^2 + c1 t + c0` in (c1, c0) order.
    pub fn quadratic(p: u32) -> Result<FieldSpec> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        for c1 in 0..p {
            for c0 in 1..p {
                if let Ok(k) = Self::with_modulus(p, c0, c1) {
                    return Ok(k);
                }
            }
        }
        unreachable!("every prime field has an irreducible quadratic")
    }

    pub fn with_modulus(p: u32, c0: u32, c1: u32) -> Result<FieldSpec> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let (c0, c1) = (c0 % p, c1 % p);
        let p64 = p as u64;
        let has_root =
            (0..p64).any(|t| (t * t + c1 as u64 * t + c0 as u64) % p64 == 0);
        if has_root {
            return Err(Error::ReducibleModulus(c0, c1));
        }
        Ok(FieldSpec { p, m: 2, modulus: [c0, c1] })
    }

    pub fn new(p: u32, m: u32) -> Result<FieldSpec> {
        match m {
            1 => Self::prime(p),
            2 => Self::quadratic(p),
            _ => Err(Error::UnsupportedDegree(m)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> [u32; 2] {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.m)
    }

    /// The adjoined root t (only meaningful for m = 2).
    pub fn generator(&self) -> Fq {
        if self.m == 2 {
            Fq::new(0, 1)
        } else {
            Fq::ONE
        }
    }

    pub fn from_int(&self, n: i64) -> Fq {
        Fq::scalar(n.rem_euclid(self.p as i64) as u32)
    }

    /// All q elements in a fixed order: c0 fastest, then c1.
    pub fn elements(&self) -> Vec<Fq> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let c1_range = if self.m == 2 { self.p } else { 1 };
        for c1 in 0..c1_range {
            for c0 in 0..self.p {
                out.push(Fq::new(c0, c1));
            }
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p;
        Fq { c: [(a.c[0] + b.c[0]) % p, (a.c[1] + b.c[1]) % p] }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.p;
        Fq { c: [(p - a.c[0]) % p, (p - a.c[1]) % p] }
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        let p = self.p as u64;
        if self.m == 1 {
            return Fq::scalar(((a.c[0] as u64 * b.c[0] as u64) % p) as u32);
        }
        let (a0, a1) = (a.c[0] as u64, a.c[1] as u64);
        let (b0, b1) = (b.c[0] as u64, b.c[1] as u64);
        let lo = a0 * b0 % p;
        let mid = (a0 * b1 + a1 * b0) % p;
        let hi = a1 * b1 % p;
        // t^2 = -c1 t - c0
        let c0 = self.modulus[0] as u64;
        let c1 = self.modulus[1] as u64;
        let r0 = (lo + p * p - hi * c0 % p) % p;
        let r1 = (mid + p * p - hi * c1 % p) % p;
        Fq::new(r0 as u32, r1 as u32)
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = Fq::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.is_zero() {
            return None;
        }
        if self.m == 1 {
            // extended Euclid over u32
            let (mut r0, mut r1) = (self.p as i64, a.c[0] as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (s0, s1) = (s1, s0 - q * s1);
            }
            return Some(self.from_int(s0));
        }
        Some(self.pow(a, self.order() - 2))
    }

    /// a ↦ a^{p^r}.
    pub fn frobenius(&self, a: Fq, r: u32) -> Fq {
        if self.m == 1 {
            return a;
        }
        // Frobenius has order m = 2 on F_{p^2}
        if r % 2 == 0 {
            a
        } else {
            self.pow(a, self.p as u64)
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^2", self.p)
        }
    }
}
